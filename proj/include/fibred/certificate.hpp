#pragma once

// Nonnegative combinations of catalog inequalities that certify the strict
// Arakelov conclusions, and their exact verification.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibred/catalog.hpp"
#include "fibred/error.hpp"
#include "fibred/inequalities.hpp"
#include "fibred/thresholds.hpp"

namespace fibred {

inline const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids{"family-strict-arakelov", "typeI-II", "hyperelliptic-geodesic",
                                            "g3-nonhyper"};
  return ids;
}

inline void require_scenario(const std::string& s) {
  const auto& ids = scenario_ids();
  if (std::find(ids.begin(), ids.end(), s) == ids.end())
    throw Error(ErrorKind::UnknownScenario, "unknown scenario '" + s + "'");
}

/// Either every integer g >= g0, or the single point (g, q).
struct CertDomain {
  bool ray = true;
  long g0 = 2;
  long g = 2;
  std::optional<long> q;

  [[nodiscard]] std::string str() const {
    if (ray) return "g >= " + std::to_string(g0);
    return "g = " + std::to_string(g) + (q ? ", q_f = " + std::to_string(*q) : "");
  }
  [[nodiscard]] Point point() const {
    return q ? Point(Rational(g), Rational(*q)) : Point(Rational(g));
  }
};

struct CertTerm {
  SymbolicForm form;
  RationalFunction multiplier;
  bool closing = false;  // used after the penalty bound
};

struct CertificateCase {
  std::string label;
  std::string condition;
  CertDomain domain;
  SymbolicForm target;
  std::vector<CertTerm> terms;
  std::optional<SymbolicForm> penalty;
};

struct Certificate {
  std::string scenario;
  long g = 0;
  std::vector<CertificateCase> cases;
  std::vector<std::string> notes;
};

struct Verification {
  bool ok = true;
  std::vector<std::string> diagnostics;

  void fail(std::string why) {
    ok = false;
    diagnostics.push_back(std::move(why));
  }
};

namespace detail {

using Combination = std::map<std::string, RationalFunction>;

inline void add_scaled(Combination& acc, RationalFunction& constant, const SymbolicForm& f,
                       const RationalFunction& m) {
  for (const auto& [s, c] : f.difference()) {
    auto [it, inserted] = acc.try_emplace(s, m * c);
    if (!inserted) it->second = it->second + m * c;
  }
  constant = constant + m * f.difference_constant();
}

/// Difference of two normal forms, restricted to nonzero entries.
inline std::vector<std::string> mismatches(const Combination& got, const RationalFunction& got_const,
                                           const SymbolicForm& want, const CertDomain& dom) {
  Combination diff = got;
  for (const auto& [s, c] : want.difference()) {
    auto [it, inserted] = diff.try_emplace(s, -c);
    if (!inserted) it->second = it->second - c;
  }
  std::vector<std::string> out;
  auto is_zero = [&](const RationalFunction& r) {
    if (r.is_zero()) return true;
    // Point domains compare values; ray domains need identical functions.
    return !dom.ray && r.evaluate(dom.point()).is_zero();
  };
  for (const auto& [s, c] : diff)
    if (!is_zero(c)) out.push_back(s + ": residual " + c.str());
  const RationalFunction dc = got_const - want.difference_constant();
  if (!is_zero(dc)) out.push_back("constant: residual " + dc.str());
  return out;
}

inline bool sign_ok(const RationalFunction& m, const CertDomain& dom, bool strict) {
  if (dom.ray) {
    if (m.uses(Var::q) || m.uses(Var::i)) return false;
    const auto p = strict ? detail::sign_on_ray("multiplier", m, dom.g0, true)
                          : nonnegativity_on_ray("multiplier", m, dom.g0);
    return p.proved();
  }
  const Rational v = m.evaluate(dom.point());
  return strict ? v.sign() > 0 : v.sign() >= 0;
}

}  // namespace detail

inline Verification verify_case(const CertificateCase& c) {
  Verification v;
  detail::Combination all;
  detail::Combination core;
  RationalFunction all_const;
  RationalFunction core_const;
  bool strict_witness = false;
  for (const auto& t : c.terms) {
    detail::add_scaled(all, all_const, t.form, t.multiplier);
    if (!t.closing) detail::add_scaled(core, core_const, t.form, t.multiplier);
    if (t.form.rel == Relation::Eq) continue;
    if (c.target.rel == Relation::Eq) v.fail(t.form.id + ": inequality used for an equality target");
    if (!detail::sign_ok(t.multiplier, c.domain, false))
      v.fail(t.form.id + ": multiplier " + t.multiplier.str() + " is not nonnegative on " + c.domain.str());
    if (t.form.rel == Relation::Lt && detail::sign_ok(t.multiplier, c.domain, true)) strict_witness = true;
  }
  if (c.target.rel == Relation::Lt && !strict_witness)
    v.fail("strict target but no strict term with a positive multiplier");
  for (auto& m : detail::mismatches(all, all_const, c.target, c.domain)) v.fail("target " + m);
  if (c.penalty)
    for (auto& m : detail::mismatches(core, core_const, *c.penalty, c.domain)) v.fail("penalty " + m);
  return v;
}

inline Verification check_certificate(const Certificate& cert) {
  Verification v;
  for (const auto& c : cert.cases) {
    const auto r = verify_case(c);
    for (const auto& d : r.diagnostics) v.fail("[" + c.label + "] " + d);
  }
  return v;
}

/// True iff every case recombines exactly to its target with admissible signs.
inline bool verify_certificate(const Certificate& cert) { return check_certificate(cert).ok; }

// ---------------------------------------------------------------------------
// Scenario builders

namespace detail {

inline SymbolicForm equality_zero(const std::string& symbol) {
  SymbolicForm f;
  f.id = symbol + "_zero";
  f.rel = Relation::Eq;
  f.left(symbol, RationalFunction(1));
  return f;
}

inline CertTerm term(SymbolicForm f, RationalFunction m, bool closing = false) {
  return {std::move(f), std::move(m), closing};
}

/// The penalty bound deg rel rank/2 L - sum c_s s.
inline SymbolicForm penalty_form(const RationalFunction& half_rank_L, const std::map<std::string, RationalFunction>& c,
                                 Relation rel, bool subtract_lambda = false) {
  SymbolicForm f;
  f.id = "penalty";
  f.rel = rel;
  f.left(sym::deg, RationalFunction(1));
  f.right(sym::log_deg, half_rank_L);
  if (subtract_lambda) f.right(sym::lambda, -half_rank_L);
  for (const auto& [s, k] : c) f.right(s, -k);
  return f;
}

inline Certificate family_strict_arakelov_certificate(long g) {
  using S = RationalFunction;
  if (g < 5)
    throw Error(ErrorKind::OutOfRange, "family-strict-arakelov needs g >= 5: the delta penalty (g-4)/(4(g-1)) is " +
                                           strict_arakelov_penalty(static_cast<int>(g)).str() + " at g = " +
                                           std::to_string(g));
  const S G = rf_g();
  const S a = G / (sc<S>(4) * (G - sc<S>(1)));
  const S k = (G - sc<S>(4)) / (sc<S>(4) * (G - sc<S>(1)));
  const CertDomain dom{true, 5, g, std::nullopt};
  Certificate cert;
  cert.scenario = "family-strict-arakelov";
  cert.g = g;

  CertificateCase pos;
  pos.label = "penalty";
  pos.condition = "delta_1 + 4 delta_h > 0";
  pos.domain = dom;
  pos.target = arakelov_form(G);
  pos.terms.push_back(term(my1_form(G), a));
  pos.terms.push_back(term(moriwaki_form(G), a));
  pos.terms.push_back(term(ct_bound_form<S>("1"), sc<S>(2) * a));
  pos.terms.push_back(term(ct_bound_form<S>("h"), sc<S>(3) * a));
  SymbolicForm axiom;
  axiom.id = "delta_1 + 4 delta_h > 0";
  axiom.rel = Relation::Lt;
  axiom.right(sym::delta(1), sc<S>(1));
  axiom.right(sym::delta_h, sc<S>(4));
  axiom.hypotheses = {"case assumption"};
  pos.terms.push_back(term(axiom, k, true));
  pos.penalty = penalty_form(G / sc<S>(2), {{sym::delta(1), k}, {sym::delta_h, sc<S>(4) * k}}, Relation::Le);
  cert.cases.push_back(pos);

  CertificateCase zero;
  zero.label = "no separating nodes";
  zero.condition = "delta_1 = delta_h = 0, so Delta_ct is empty and my1 is strict";
  zero.domain = dom;
  zero.target = arakelov_form(G);
  auto strict_my1 = my1_form(G);
  strict_my1.rel = Relation::Lt;
  strict_my1.hypotheses.push_back("Delta_nc nonempty or Delta empty");
  zero.terms.push_back(term(strict_my1, a));
  zero.terms.push_back(term(moriwaki_form(G), a));
  zero.terms.push_back(term(ct_bound_form<S>("1"), sc<S>(2) * a));
  zero.terms.push_back(term(ct_bound_form<S>("h"), sc<S>(3) * a));
  zero.terms.push_back(term(equality_zero(sym::delta(1)), -k));
  zero.terms.push_back(term(equality_zero(sym::delta_h), -sc<S>(4) * k));
  cert.cases.push_back(zero);

  cert.notes.push_back("penalty coefficient on delta_1 + 4 delta_h is (g-4)/(4(g-1)); the displayed (g-4)/g is "
                       "not a consequence of my1 and moriwaki");
  return cert;
}

inline Certificate type_i_ii_certificate(long g) {
  using S = RationalFunction;
  if (g < 12) {
    const long num = g * g - 11 * g - 2;
    throw Error(ErrorKind::OutOfRange,
                "typeI-II needs g >= 12: g^2 - 11g - 2 = " + std::to_string(num) + " at g = " + std::to_string(g) +
                    (g < 7 ? " and my2 needs g >= 7" : ""));
  }
  const S G = rf_g();
  const S K = sc<S>(5) * G * G - sc<S>(23) * G + sc<S>(6);
  const S x = G * (G - sc<S>(2)) / K;
  const S y = G / K;
  const S c = sc<S>(2) * G * (G - sc<S>(1)) * (G - sc<S>(2)) / K;
  const S gap = G * (G * G - sc<S>(11) * G - sc<S>(2)) / (sc<S>(2) * K);

  Certificate cert;
  cert.scenario = "typeI-II";
  cert.g = g;
  CertificateCase cc;
  cc.label = "Lambda-corrected Arakelov";
  cc.condition = "non-hyperelliptic Torelli curve, pushforward semi-stable";
  cc.domain = {true, 12, g, std::nullopt};
  cc.target = arakelov_form(G, true);
  cc.terms.push_back(term(my2_form(G), x));
  cc.terms.push_back(term(sharp2_form(G), x + y));
  cc.terms.push_back(term(noether_form<S>(), -y));
  cc.terms.push_back(term(nonneg_form<S>(sym::t_lambda), x / sc<S>(2) + sc<S>(2) * y));
  cc.terms.push_back(term(nonneg_form<S>(sym::t_rest), y));
  cc.terms.push_back(term(nonneg_form<S>(sym::delta_f), y));
  SymbolicForm axiom;
  axiom.id = "L - Lambda > 0";
  axiom.rel = Relation::Lt;
  axiom.right(sym::log_deg, sc<S>(1));
  axiom.right(sym::lambda, sc<S>(-1));
  axiom.hypotheses = {"L_B - |Lambda| = 2 deg Omega_C(log) > 0"};
  cc.terms.push_back(term(axiom, gap, true));
  cc.penalty = penalty_form(c, {}, Relation::Le, true);
  cert.cases.push_back(cc);
  cert.notes.push_back("gap g/2 - 2g(g-1)(g-2)/(5g^2-23g+6) = g(g^2-11g-2)/(2(5g^2-23g+6)); the displayed "
                       "numerator g^2-11g+2 does not match the combination");
  return cert;
}

inline Certificate g3_certificate(long g) {
  using S = RationalFunction;
  if (g != 3) throw Error(ErrorKind::OutOfRange, "g3-nonhyper is only defined at g = 3");
  const S G = sc<S>(3);
  Certificate cert;
  cert.scenario = "g3-nonhyper";
  cert.g = 3;
  CertificateCase cc;
  cc.label = "genus 3";
  cc.condition = "non-hyperelliptic, non-isotrivial";
  cc.domain = {false, 3, 3, std::nullopt};
  cc.target = arakelov_form(G);
  cc.terms.push_back(term(g3_degree_form<S>(), sc<S>(1)));
  cc.terms.push_back(term(g3_omega_form<S>(), sc<S>(-3, 8)));
  cc.terms.push_back(term(my1_form(G), sc<S>(3, 8)));
  cc.terms.push_back(term(ct_bound_form<S>("1"), sc<S>(3, 4)));
  cc.terms.push_back(term(ct_bound_form<S>("h"), sc<S>(9, 8)));
  cc.terms.push_back(term(delta_h_sum_form<S>(3), sc<S>(9, 8)));
  cc.terms.push_back(term(positive_sum_form<S>("h + delta_0 + delta_1 > 0", {sym::h, sym::delta(0), sym::delta(1)},
                                               "deg > 0 and the genus-3 degree relation"),
                          sc<S>(1, 72), true));
  cc.terms.push_back(term(nonneg_form<S>(sym::h), sc<S>(3, 8), true));
  cc.terms.push_back(term(nonneg_form<S>(sym::delta(1)), sc<S>(1, 36), true));
  cc.penalty = penalty_form(sc<S>(3, 2),
                            {{sym::h, sc<S>(7, 18)}, {sym::delta(0), sc<S>(1, 72)}, {sym::delta(1), sc<S>(1, 24)}},
                            Relation::Le);
  cert.cases.push_back(cc);
  return cert;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Hyperelliptic families

struct HyperellipticPlan {
  long g = 0;
  long q = 0;
  bool nc_branch = false;  // Delta_nc nonempty
  bool feasible = false;
  Rational m;                      // multiplier on my1 and sharp1
  std::vector<Rational> penalty;   // index -> coefficient (index 0 unused; nc branch uses 1 and "h" at 2)
  Rational t;                      // multiplier on sharp1_prime
  std::vector<Rational> closing;   // coefficients after folding
  std::string detail;
};

namespace detail {

inline Rational beta(long g, long q, long i) {
  if (i == 1)
    return Rational(2 * g + 1 - 3 * q, 2 * g + 1) - Rational(3 * (g - q), 4 * (g - 1));
  return Rational((2 * g + 1 - 3 * q) * i * (g - i), (2 * g + 1) * (g - 1)) - Rational(g - q, g - 1);
}

}  // namespace detail

/// Multipliers closing the strict Arakelov bound for one hyperelliptic
/// signature, or the reason none were found.
inline HyperellipticPlan hyperelliptic_plan(long g, long q, bool nc_branch) {
  HyperellipticPlan p;
  p.g = g;
  p.q = q;
  p.nc_branch = nc_branch;
  p.m = Rational(g - q, 4 * (g - 1));
  const int top = max_delta_index(static_cast<int>(g));
  if (nc_branch) {
    const Rational a1((g * g - (6 * q + 3) * g + 12 * q - 4), 4 * (g + 1) * (g - 1));
    const Rational ah((4 * g * g - (13 * q + 12) * g + 37 * q - 16), 4 * (g + 1) * (g - 1));
    p.penalty = {Rational(0), a1, ah};
    p.closing = p.penalty;
    const bool h_needed = top >= 2;
    p.feasible = a1.sign() >= 0 && (!h_needed || ah.sign() >= 0);
    if (!p.feasible)
      p.detail = a1.sign() < 0 ? "alpha_1 = " + a1.str() + " < 0" : "alpha_h = " + ah.str() + " < 0";
    return p;
  }
  p.penalty.assign(static_cast<std::size_t>(top) + 1, Rational(0));
  for (int i = 1; i <= top; ++i) p.penalty[i] = detail::beta(g, q, i);
  auto folded = [&](const Rational& t) {
    std::vector<Rational> c = p.penalty;
    for (int i = 1; i <= top; ++i) {
      if (i < q) {
        c[i] += Rational(4L * i * (2 * i + 1)) * t;
      } else {
        c[i] -= xi0_weight(static_cast<int>(g), i) * t;
      }
    }
    return c;
  };
  auto all_positive = [&](const std::vector<Rational>& c) {
    for (int i = 1; i <= top; ++i)
      if (c[i].sign() <= 0) return false;
    return true;
  };
  if (all_positive(p.penalty)) {
    p.feasible = true;
    p.closing = p.penalty;
    return p;
  }
  if (q < 2) {
    p.detail = "beta_1 = " + p.penalty[1].str() + " and no secondary bound for q_f < 2";
    return p;
  }
  // t must satisfy beta_i + 4i(2i+1) t > 0 (i < q) and beta_i - w_i t > 0 (i >= q).
  Rational lo(0);
  std::optional<Rational> hi;
  for (int i = 1; i <= top; ++i) {
    if (i < q) {
      lo = std::max(lo, -p.penalty[i] / Rational(4L * i * (2 * i + 1)));
    } else {
      const Rational up = p.penalty[i] / xi0_weight(static_cast<int>(g), i);
      hi = hi ? std::min(*hi, up) : up;
    }
  }
  p.t = hi ? (lo + *hi) / Rational(2) : lo + Rational(1);
  p.closing = folded(p.t);
  p.feasible = all_positive(p.closing);
  if (!p.feasible) p.detail = "no fold of the secondary bound makes every coefficient positive";
  return p;
}

inline std::vector<long> case_one_irregularities(long g) {
  std::vector<long> qs;
  for (long q = 0; q <= std::min<long>(1, (g + 1) / 2); ++q) qs.push_back(q);
  return qs;
}

inline std::vector<long> case_two_irregularities(long g) {
  std::vector<long> qs;
  for (long q = 0; q <= (g - 1) / 2; ++q) qs.push_back(q);
  return qs;
}

struct ExclusionReport {
  long g = 0;
  bool excluded = false;
  std::vector<HyperellipticPlan> checks;
};

/// Exclusion of totally geodesic curves in the hyperelliptic Torelli locus at
/// genus g: every admissible q_f in both branches must close.
inline ExclusionReport hyperelliptic_exclusion(long g) {
  if (g < 2) throw Error(ErrorKind::OutOfRange, "genus must be at least 2");
  ExclusionReport r;
  r.g = g;
  r.excluded = true;
  for (long q : case_one_irregularities(g)) {
    r.checks.push_back(hyperelliptic_plan(g, q, true));
    r.excluded = r.excluded && r.checks.back().feasible;
  }
  for (long q : case_two_irregularities(g)) {
    r.checks.push_back(hyperelliptic_plan(g, q, false));
    r.excluded = r.excluded && r.checks.back().feasible;
  }
  return r;
}

namespace detail {

inline CertificateCase hyperelliptic_case(const HyperellipticPlan& p) {
  using S = RationalFunction;
  const int g = static_cast<int>(p.g);
  const int top = max_delta_index(g);
  const S G = sc<S>(g);
  const S Q = sc<S>(p.q);
  const S m(p.m);
  CertificateCase cc;
  cc.label = std::string(p.nc_branch ? "Delta_nc nonempty" : "Delta_nc empty") + ", q_f = " + std::to_string(p.q);
  cc.condition = p.nc_branch ? "hyperelliptic, some non-compact fiber" : "hyperelliptic, all fibers compact type";
  cc.domain = {false, p.g, p.g, p.q};
  cc.target = arakelov_form(G - Q);
  auto upper = my1_form(G);
  if (p.nc_branch) {
    upper.rel = Relation::Lt;
    upper.hypotheses.push_back("Delta_nc nonempty");
  }
  cc.terms.push_back(term(upper, m));
  cc.terms.push_back(term(lift(p.nc_branch ? sharp1_nc_form(Rational(g), Rational(p.q))
                                           : sharp1_c_form(g, Rational(p.q))),
                          m));
  cc.terms.push_back(term(ct_bound_form<S>("1"), sc<S>(2) * m));
  cc.terms.push_back(term(ct_bound_form<S>("h"), sc<S>(3) * m));

  std::map<std::string, S> pen;
  if (p.nc_branch) {
    pen[sym::delta(1)] = S(p.penalty[1]);
    pen[sym::delta_h] = S(p.penalty[2]);
    cc.penalty = penalty_form((G - Q) / sc<S>(2), pen, Relation::Lt);
    cc.terms.push_back(term(nonneg_form<S>(sym::delta(1)), S(p.closing[1]), true));
    if (top >= 2) {
      cc.terms.push_back(term(nonneg_form<S>(sym::delta_h), S(p.closing[2]), true));
    } else {
      cc.terms.push_back(term(delta_h_sum_form<S>(g), S(p.closing[2]), true));
    }
    return cc;
  }

  cc.terms.push_back(term(delta_h_sum_form<S>(g), sc<S>(3) * m));
  for (int i = 1; i <= top; ++i) pen[sym::delta(i)] = S(p.penalty[i]);
  cc.penalty = penalty_form((G - Q) / sc<S>(2), pen, Relation::Le);
  if (!p.t.is_zero()) cc.terms.push_back(term(lift(sharp1_prime_form<Rational>(g, static_cast<int>(p.q))), S(p.t), true));
  Rational s = p.closing[1];
  for (int i = 1; i <= top; ++i) s = std::min(s, p.closing[i]);
  std::vector<std::string> all;
  for (int i = 1; i <= top; ++i) all.push_back(sym::delta(i));
  cc.terms.push_back(term(positive_sum_form<S>("sum delta_i > 0", all,
                                               "hyperelliptic with Delta_nc empty has a separating node"),
                          S(s), true));
  for (int i = 1; i <= top; ++i)
    if (p.closing[i] != s) cc.terms.push_back(term(nonneg_form<S>(sym::delta(i)), S(p.closing[i] - s), true));
  return cc;
}

inline Certificate hyperelliptic_certificate(long g) {
  const auto report = hyperelliptic_exclusion(g);
  if (!report.excluded) {
    std::string why;
    for (const auto& c : report.checks)
      if (!c.feasible) {
        why = std::string(c.nc_branch ? "Delta_nc nonempty" : "Delta_nc empty") + ", q_f = " + std::to_string(c.q) +
              ": " + c.detail;
        break;
      }
    throw Error(ErrorKind::OutOfRange, "hyperelliptic-geodesic has no certificate at g = " + std::to_string(g) +
                                           " (" + why + ")");
  }
  Certificate cert;
  cert.scenario = "hyperelliptic-geodesic";
  cert.g = g;
  for (const auto& p : report.checks) cert.cases.push_back(hyperelliptic_case(p));
  return cert;
}

}  // namespace detail

inline Certificate build_certificate(const std::string& scenario, long g) {
  require_scenario(scenario);
  if (scenario == "family-strict-arakelov") return detail::family_strict_arakelov_certificate(g);
  if (scenario == "typeI-II") return detail::type_i_ii_certificate(g);
  if (scenario == "g3-nonhyper") return detail::g3_certificate(g);
  return detail::hyperelliptic_certificate(g);
}

/// Smallest and (if bounded) largest genus at which build_certificate succeeds.
inline std::pair<long, std::optional<long>> scenario_range(const std::string& scenario) {
  require_scenario(scenario);
  if (scenario == "family-strict-arakelov") return {5, std::nullopt};
  if (scenario == "typeI-II") return {12, std::nullopt};
  if (scenario == "g3-nonhyper") return {3, 3};
  return {8, std::nullopt};
}

}  // namespace fibred
