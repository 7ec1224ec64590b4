#pragma once

// Evaluation of the inequality catalog on concrete family data, and Higgs
// field classification.

#include <string>
#include <utility>
#include <vector>

#include "fibred/catalog.hpp"
#include "fibred/error.hpp"
#include "fibred/hyperelliptic.hpp"
#include "fibred/invariants.hpp"

namespace fibred {

// ---------------------------------------------------------------------------
// Per-fiber sums

struct FiberSums {
  Rational t_lambda;
  Rational t_rest;
  Rational t_ct;
  Rational t_lambda_prime;
  Rational n_ct_b;
  Rational t_ub;
  bool all_tagged = true;
  bool available = false;
};

/// Sums of l-data over compact-type fibers. Without fiber records the sums are
/// only known (as zero) when there are no compact-type fibers.
inline FiberSums fiber_sums(const FamilyData& fam) {
  FiberSums s;
  if (!fam.per_fiber) {
    s.available = fam.n_ct == 0;
    return s;
  }
  s.available = true;
  for (const auto& rec : *fam.per_fiber) {
    const auto inv = classify_fiber(rec, fam.g);
    if (!inv.singular() || !inv.compact_jacobian) continue;
    const Rational lh(inv.l_h);
    const Rational l1(inv.l1());
    const Rational light = lh + l1 - Rational(1);
    const Rational heavy = Rational(3) * lh + Rational(2) * l1 - Rational(3);
    if (inv.lambda_member) {
      s.t_lambda += light;
    } else {
      s.t_rest += heavy;
    }
    s.t_ct += heavy;
    switch (inv.ct_class) {
      case CtClass::LambdaPrime: s.t_lambda_prime += light; break;
      case CtClass::Balanced: s.n_ct_b += Rational(1); break;
      case CtClass::Unbalanced: s.t_ub += heavy; break;
      case CtClass::Unspecified: s.all_tagged = false; break;
    }
  }
  return s;
}

/// Values of every catalog symbol available for this family.
inline SymbolValues symbols_of(const FamilyData& fam, const RelativeInvariants& rel) {
  SymbolValues v;
  v[sym::omega_sq] = rel.omega_rel_sq;
  v[sym::deg] = rel.deg_pushforward;
  v[sym::delta_f] = rel.delta_f;
  v[sym::log_deg] = Rational(fam.log_deg());
  v[sym::lambda] = Rational(fam.lambda_count);
  for (int i = 0; i <= max_delta_index(fam.g); ++i) {
    v[sym::delta(i)] = fam.delta_at(i);
    v[sym::delta_ct(i)] = fam.delta_ct_at(i);
  }
  v[sym::delta_h] = fam.delta_h();
  v[sym::delta_ct_h] = fam.delta_ct_h();
  for (std::size_t j = 0; j < fam.xi.size(); ++j) v[sym::xi(static_cast<int>(j))] = fam.xi[j];
  if (fam.h) v[sym::h] = *fam.h;
  const auto sums = fiber_sums(fam);
  if (sums.available) {
    v[sym::t_lambda] = sums.t_lambda;
    v[sym::t_rest] = sums.t_rest;
    v[sym::t_ct] = sums.t_ct;
    if (sums.all_tagged) {
      v[sym::t_lambda_prime] = sums.t_lambda_prime;
      v[sym::n_ct_b] = sums.n_ct_b;
      v[sym::t_ub] = sums.t_ub;
    }
  }
  return v;
}

namespace detail {

inline void require_non_isotrivial(const RelativeInvariants& rel) {
  if (rel.deg_pushforward.sign() <= 0)
    throw Error(ErrorKind::IsotrivialFamily, "inequality presupposes a non-isotrivial family");
}

/// Strict when some fiber has non-compact Jacobian or no fiber is singular.
inline Relation miyaoka_relation(const FamilyData& fam) {
  return fam.n_nc > 0 || !fam.has_singular_fibers() ? Relation::Lt : Relation::Le;
}

inline void require_fiber_sums(const FamilyData& fam) {
  if (!fiber_sums(fam).available)
    throw Error(ErrorKind::MissingFiberData, "per-fiber records are needed for compact-type l-data");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog evaluators

inline SlackReport my1(const FamilyData& fam, const RelativeInvariants& rel) {
  detail::require_non_isotrivial(rel);
  auto form = my1_form(Rational(fam.g));
  form.rel = detail::miyaoka_relation(fam);
  return evaluate(form, symbols_of(fam, rel));
}

inline SlackReport moriwaki(const FamilyData& fam, const RelativeInvariants& rel) {
  detail::require_non_isotrivial(rel);
  return evaluate(moriwaki_form(Rational(fam.g)), symbols_of(fam, rel));
}

/// The branch of the hyperelliptic slope inequality matching Delta_nc, plus
/// the secondary bound when Delta_nc is empty and q_f >= 2.
inline std::vector<SlackReport> sharp1(const FamilyData& fam, const RelativeInvariants& rel) {
  if (!fam.hyperelliptic) throw Error(ErrorKind::NotHyperelliptic, "sharp1 needs a hyperelliptic family");
  const int q = require_irregularity(fam);
  detail::require_non_isotrivial(rel);
  if (q >= fam.g) throw Error(ErrorKind::InvalidFamily, "q_f must be below g for a non-isotrivial family");
  const auto values = symbols_of(fam, rel);
  std::vector<SlackReport> out;
  if (fam.n_nc > 0) {
    out.push_back(evaluate(sharp1_nc_form(Rational(fam.g), Rational(q)), values));
  } else {
    out.push_back(evaluate(sharp1_c_form(fam.g, Rational(q)), values));
    if (q >= 2) out.push_back(evaluate(sharp1_prime_form<Rational>(fam.g, q), values));
  }
  return out;
}

inline SlackReport my2(const FamilyData& fam, const RelativeInvariants& rel) {
  if (fam.g < 7) throw Error(ErrorKind::GenusTooSmall, "my2 needs g >= 7");
  detail::require_non_isotrivial(rel);
  detail::require_fiber_sums(fam);
  auto form = my2_form(Rational(fam.g));
  form.rel = detail::miyaoka_relation(fam);
  auto r = evaluate(form, symbols_of(fam, rel));
  r.hypotheses_met = fam.assertions.torelli_representing && fam.assertions.non_hyperelliptic_torelli;
  if (!r.hypotheses_met) r.note = "needs asserted torelli_representing and non_hyperelliptic_torelli";
  return r;
}

inline SlackReport sharp2(const FamilyData& fam, const RelativeInvariants& rel) {
  if (fam.g < 3) throw Error(ErrorKind::GenusTooSmall, "sharp2 needs g >= 3");
  if (!fam.assertions.pushforward_semistable)
    throw Error(ErrorKind::HypothesisNotAsserted, "sharp2 needs the pushforward_semistable assertion");
  detail::require_fiber_sums(fam);
  auto r = evaluate(sharp2_form(Rational(fam.g)), symbols_of(fam, rel));
  r.hypotheses_met = fam.assertions.torelli_representing && fam.assertions.non_hyperelliptic_torelli;
  if (!r.hypotheses_met) r.note = "needs asserted torelli_representing and non_hyperelliptic_torelli";
  return r;
}

inline SlackReport nonhyper_lower(const FamilyData& fam, const RelativeInvariants& rel) {
  if (fam.hyperelliptic) throw Error(ErrorKind::Hyperelliptic, "nonhyper_lower needs a non-hyperelliptic family");
  if (!fam.assertions.pushforward_semistable)
    throw Error(ErrorKind::HypothesisNotAsserted, "nonhyper_lower needs the pushforward_semistable assertion");
  detail::require_fiber_sums(fam);
  return evaluate(nonhyper_lower_form(Rational(fam.g)), symbols_of(fam, rel));
}

/// Refined Miyaoka-Yau bound; needs every compact-type fiber tagged with its class.
inline SlackReport my1_refined(const FamilyData& fam, const RelativeInvariants& rel) {
  detail::require_non_isotrivial(rel);
  const auto sums = fiber_sums(fam);
  if (!sums.available || !sums.all_tagged)
    throw Error(ErrorKind::MissingFiberData, "every compact-type fiber needs a ct_class tag");
  auto form = refined_upper_form(Rational(fam.g));
  form.rel = detail::miyaoka_relation(fam);
  return evaluate(form, symbols_of(fam, rel));
}

/// Coefficient of delta_1 + 4 delta_h in the strict Arakelov bound for
/// families, (g-4)/(4(g-1)).
inline Rational strict_arakelov_penalty(int g) { return Rational(g - 4, 4L * (g - 1)); }

/// deg <= g/2 L - (g-4)/(4(g-1)) (delta_1 + 4 delta_h), strict when
/// delta_1 = delta_h = 0.
inline SlackReport strict_arakelov_family(int g, const FamilyData& fam, const RelativeInvariants& rel) {
  if (g <= 4) throw Error(ErrorKind::GenusTooSmall, "the strict Arakelov bound for families needs g > 4");
  detail::require_non_isotrivial(rel);
  const Rational k = strict_arakelov_penalty(g);
  const Rational penalty = fam.delta_at(1) + Rational(4) * fam.delta_h();
  auto r = make_report("strict_arakelov_family", rel.deg_pushforward,
                       Rational(g, 2) * Rational(fam.log_deg()) - k * penalty,
                       penalty.is_zero() ? Relation::Lt : Relation::Le);
  return r;
}

/// Degree and omega^2 of a genus-3 non-hyperelliptic family from (h, delta_0, delta_1).
inline std::pair<Rational, Rational> g3_relations(const Rational& h, const Rational& delta0,
                                                  const Rational& delta1) {
  return {h / Rational(9) + delta0 / Rational(9) + delta1 / Rational(3),
          Rational(4, 3) * h + delta0 / Rational(3) + Rational(3) * delta1};
}

/// Per-fiber inequalities behind the coarse Miyaoka-Yau bound, one or two
/// per tagged compact-type fiber.
inline std::vector<SlackReport> per_fiber_upper_checks(const FamilyData& fam) {
  std::vector<SlackReport> out;
  if (!fam.per_fiber) return out;
  int index = 0;
  for (const auto& rec : *fam.per_fiber) {
    const auto inv = classify_fiber(rec, fam.g);
    const std::string tag = "fiber[" + std::to_string(index++) + "]";
    if (!inv.singular() || !inv.compact_jacobian) continue;
    const Rational lh(inv.l_h);
    const Rational l1(inv.l1());
    const Rational rhs = Rational(2) * inv.delta[1] + Rational(3) * inv.delta_h();
    switch (inv.ct_class) {
      case CtClass::LambdaPrime:
        out.push_back(make_report(tag + ".lambda_prime", Rational(3, 2) * (lh + l1 - Rational(1)), rhs,
                                  Relation::Lt));
        break;
      case CtClass::Balanced:
        out.push_back(make_report(tag + ".ct_b", Rational(2 * fam.g - 2) - Rational(fam.g - 1, 6), rhs,
                                  Relation::Lt));
        break;
      case CtClass::Unbalanced:
        out.push_back(make_report(tag + ".ct_ub", Rational(3) * lh + Rational(2) * l1 - Rational(3), rhs,
                                  Relation::Le));
        out.push_back(make_report(tag + ".l_h", lh - Rational(1), inv.delta_h(), Relation::Le));
        break;
      case CtClass::Unspecified: break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Higgs field

struct HiggsData {
  Rational deg_pushforward;
  int rank_A = 0;
  Rational log_deg;
  int g = 2;
};

enum class HiggsClass { StrictlyMaximal, Maximal, Neither };

constexpr std::string_view to_string(HiggsClass c) {
  switch (c) {
    case HiggsClass::StrictlyMaximal: return "StrictlyMaximal";
    case HiggsClass::Maximal: return "Maximal";
    case HiggsClass::Neither: return "Neither";
  }
  return "?";
}

inline HiggsClass classify_higgs(const HiggsData& h) {
  if (h.log_deg.sign() <= 0) throw Error(ErrorKind::DegenerateBase, "log degree of the base must be positive");
  if (h.deg_pushforward.sign() <= 0) throw Error(ErrorKind::IsotrivialFamily, "deg f_*omega is zero");
  if (h.rank_A < 0 || h.rank_A > h.g) throw Error(ErrorKind::InvalidFamily, "rank_A must lie in [0, g]");
  if (h.deg_pushforward == Rational(h.g, 2) * h.log_deg) {
    if (h.rank_A != h.g)
      throw Error(ErrorKind::InvalidFamily, "deg = g/2 L forces rank_A = g, got " + std::to_string(h.rank_A));
    return HiggsClass::StrictlyMaximal;
  }
  if (h.deg_pushforward == Rational(h.rank_A, 2) * h.log_deg) return HiggsClass::Maximal;
  return HiggsClass::Neither;
}

/// q_f = g - 2 deg / L, the irregularity a maximal Higgs field would force.
inline Rational backsolve_irregularity(int g, const Rational& deg, const Rational& log_deg) {
  if (log_deg.sign() <= 0) throw Error(ErrorKind::DegenerateBase, "log degree of the base must be positive");
  return Rational(g) - Rational(2) * deg / log_deg;
}

}  // namespace fibred
