#pragma once

// Command implementations behind the fibred tool. Each returns the process
// exit code: 0 all checks hold, 1 a check is violated, 2 invalid input.

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fibred/certificate.hpp"
#include "fibred/document.hpp"
#include "fibred/hyperelliptic.hpp"
#include "fibred/inequalities.hpp"
#include "fibred/thresholds.hpp"
#include "fibred/torelli.hpp"

namespace fibred::cli {

inline constexpr int kOk = 0;
inline constexpr int kViolated = 1;
inline constexpr int kInvalid = 2;

/// Exact value with an advisory decimal for non-integers.
inline std::string show(const Rational& r) {
  return r.is_integer() ? r.str() : r.str() + " (" + r.decimal_hint() + ")";
}

inline bool violated(const SlackReport& r) { return r.applicable && r.hypotheses_met && !r.holds; }

inline json to_json(const SlackReport& r) {
  json j;
  j["id"] = r.id;
  j["applicable"] = r.applicable;
  if (r.applicable) {
    j["lhs"] = r.lhs.str();
    j["relation"] = std::string(to_string(r.rel));
    j["rhs"] = r.rhs.str();
    j["slack"] = r.slack.str();
    j["holds"] = r.holds;
    j["hypotheses_met"] = r.hypotheses_met;
  }
  j["verdict"] = r.verdict();
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json to_json(const SymbolicForm& f, const std::optional<Point>& at) {
  json j;
  j["id"] = f.id;
  j["relation"] = std::string(to_string(f.rel));
  for (const auto* side : {&f.lhs, &f.rhs}) {
    json s = json::object();
    for (const auto& [sym, c] : *side) {
      json e;
      e["symbolic"] = c.str();
      if (at) e["value"] = c.evaluate(*at).str();
      s[sym] = e;
    }
    j[side == &f.lhs ? "lhs" : "rhs"] = s;
  }
  if (!f.hypotheses.empty()) j["hypotheses"] = f.hypotheses;
  return j;
}

// ---------------------------------------------------------------------------
// report

struct FamilyAnalysis {
  RelativeInvariants rel;
  std::string source;
  std::optional<int> rank_A;
  std::optional<HiggsClass> higgs;
  std::optional<Rational> q_if_maximal;
  std::vector<SlackReport> checks;

  [[nodiscard]] int exit_code() const {
    for (const auto& c : checks)
      if (violated(c)) return kViolated;
    return kOk;
  }
};

namespace detail {

inline RelativeInvariants derive_relative(const FamilyDocument& d, std::string& source) {
  const FamilyData& fam = d.family;
  if (fam.hyperelliptic) {
    source = "hyperelliptic boundary formulas";
    return hyperelliptic_relative(fam.g, fam.xi, fam.delta);
  }
  if (d.absolute) {
    source = "absolute invariants";
    return relative_invariants(*d.absolute, fam.g, fam.b);
  }
  if (d.relative) {
    source = "stated";
    validate_relative(*d.relative);
    return *d.relative;
  }
  if (fam.h) {
    source = "genus-3 relations";
    const auto [deg, w] = g3_relations(*fam.h, fam.delta_at(0), fam.delta_at(1));
    RelativeInvariants rel{w, Rational(12) * deg - w, deg};
    validate_relative(rel);
    return rel;
  }
  throw Error(ErrorKind::InvalidFamily,
              "a non-hyperelliptic family needs 'absolute', 'relative' or, in genus 3, 'h'");
}

template <class F>
void guarded(std::vector<SlackReport>& out, const std::string& id, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    out.push_back(not_applicable(id, e.what()));
  }
}

}  // namespace detail

inline FamilyAnalysis analyze(const FamilyDocument& d) {
  const FamilyData& fam = d.family;
  FamilyAnalysis a;
  a.rel = detail::derive_relative(d, a.source);
  const Rational L(fam.log_deg());
  auto& out = a.checks;

  out.push_back(make_report("noether", Rational(12) * a.rel.deg_pushforward,
                            a.rel.omega_rel_sq + a.rel.delta_f, Relation::Eq));
  if (fam.hyperelliptic && d.absolute) {
    const auto abs_rel = relative_invariants(*d.absolute, fam.g, fam.b);
    out.push_back(make_report("absolute_deg", abs_rel.deg_pushforward, a.rel.deg_pushforward, Relation::Eq));
    out.push_back(make_report("absolute_omega_sq", abs_rel.omega_rel_sq, a.rel.omega_rel_sq, Relation::Eq));
  }
  detail::guarded(out, "arakelov", [&] {
    out.push_back(make_report("arakelov", a.rel.deg_pushforward, Rational(fam.g, 2) * L, Relation::Le));
  });
  detail::guarded(out, "my1", [&] { out.push_back(my1(fam, a.rel)); });
  detail::guarded(out, "moriwaki", [&] { out.push_back(moriwaki(fam, a.rel)); });
  if (fam.hyperelliptic) {
    detail::guarded(out, "sharp1", [&] {
      for (auto& r : sharp1(fam, a.rel)) out.push_back(std::move(r));
    });
    if (fam.q_f && *fam.q_f >= 1)
      detail::guarded(out, "xi0_bound", [&] { out.push_back(xi0_bound_check(fam.g, *fam.q_f, fam.xi, fam.delta)); });
  } else {
    detail::guarded(out, "my2", [&] { out.push_back(my2(fam, a.rel)); });
    detail::guarded(out, "sharp2", [&] { out.push_back(sharp2(fam, a.rel)); });
    detail::guarded(out, "nonhyper_lower", [&] { out.push_back(nonhyper_lower(fam, a.rel)); });
  }
  detail::guarded(out, "my1_refined", [&] { out.push_back(my1_refined(fam, a.rel)); });
  detail::guarded(out, "strict_arakelov_family",
                  [&] { out.push_back(strict_arakelov_family(fam.g, fam, a.rel)); });
  for (auto& r : per_fiber_upper_checks(fam)) out.push_back(std::move(r));

  a.rank_A = effective_rank_A(fam);
  if (L.sign() > 0 && a.rel.deg_pushforward.sign() > 0) {
    if (a.rank_A) {
      a.higgs = classify_higgs({a.rel.deg_pushforward, *a.rank_A, L, fam.g});
    } else if (a.rel.deg_pushforward == Rational(fam.g, 2) * L) {
      a.higgs = HiggsClass::StrictlyMaximal;
    }
    if (fam.hyperelliptic) a.q_if_maximal = backsolve_irregularity(fam.g, a.rel.deg_pushforward, L);
  }
  return a;
}

inline json to_json(const FamilyAnalysis& a, const FamilyData& fam) {
  json j;
  j["command"] = "report";
  j["family"] = to_json(fam);
  json inv;
  inv["deg_pushforward"] = a.rel.deg_pushforward.str();
  inv["omega_rel_sq"] = a.rel.omega_rel_sq.str();
  inv["delta_f"] = a.rel.delta_f.str();
  inv["noether_residual"] = noether_residual(a.rel).str();
  inv["log_degree"] = Rational(fam.log_deg()).str();
  inv["source"] = a.source;
  j["invariants"] = inv;
  json h;
  h["rank_A"] = a.rank_A ? json(*a.rank_A) : json(nullptr);
  h["classification"] = a.higgs ? json(std::string(to_string(*a.higgs))) : json(nullptr);
  if (a.q_if_maximal) h["q_f_if_maximal"] = a.q_if_maximal->str();
  j["higgs"] = h;
  json checks = json::array();
  for (const auto& c : a.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  j["exit_code"] = a.exit_code();
  return j;
}

inline void print_checks(std::ostream& out, const std::vector<SlackReport>& checks) {
  std::size_t width = 8;
  for (const auto& c : checks) width = std::max(width, c.id.size() + 2);
  for (const auto& c : checks) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << c.id;
    if (c.applicable) {
      out << c.lhs.str() << " " << to_string(c.rel) << " " << c.rhs.str() << "   slack " << show(c.slack) << "   "
          << c.verdict();
    } else {
      out << c.verdict();
    }
    if (!c.note.empty()) out << "  [" << c.note << "]";
    out << "\n";
  }
}

inline int cmd_report(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  try {
    const auto d = load_family_document(path);
    const auto a = analyze(d);
    const auto& fam = d.family;
    if (as_json) {
      out << to_json(a, fam).dump(2) << "\n";
      return a.exit_code();
    }
    out << "family: g = " << fam.g << ", b = " << fam.b << (fam.hyperelliptic ? ", hyperelliptic" : "")
        << ", n_nc = " << fam.n_nc << ", n_ct = " << fam.n_ct;
    if (fam.q_f) out << ", q_f = " << *fam.q_f;
    out << "\ninvariants (" << a.source << "):\n"
        << "  deg f_*omega      " << show(a.rel.deg_pushforward) << "\n"
        << "  omega^2           " << show(a.rel.omega_rel_sq) << "\n"
        << "  delta_f           " << show(a.rel.delta_f) << "\n"
        << "  noether residual  " << show(noether_residual(a.rel)) << "\n"
        << "  log degree L      " << fam.log_deg() << "\n";
    out << "higgs: rank_A = " << (a.rank_A ? std::to_string(*a.rank_A) : "unknown") << ", "
        << (a.higgs ? std::string(to_string(*a.higgs)) : "unclassified") << "\n";
    if (a.q_if_maximal) out << "  q_f forced by a maximal Higgs field: " << show(*a.q_if_maximal) << "\n";
    out << "checks:\n";
    print_checks(out, a.checks);
    return a.exit_code();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

// ---------------------------------------------------------------------------
// fiber

inline int cmd_fiber(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  try {
    const auto d = load_fiber_document(path);
    const auto inv = classify_fiber(d.fiber, d.g);
    ValidationReport v;
    if (inv.compact_jacobian) v = validate_compact_fiber(inv, d.g, d.hyperelliptic);
    const int code = v.ok() ? kOk : kViolated;
    if (as_json) {
      json j;
      j["command"] = "fiber";
      j["genus"] = d.g;
      j["compact_jacobian"] = inv.compact_jacobian;
      j["delta"] = doc::rationals(inv.delta);
      j["delta_total"] = inv.delta_total.str();
      json l = json::object();
      for (const auto& [genus, count] : inv.l) l[std::to_string(genus)] = count;
      j["l"] = l;
      j["l_h"] = inv.l_h;
      j["violations"] = v.violations;
      j["valid"] = v.ok();
      j["exit_code"] = code;
      out << j.dump(2) << "\n";
      return code;
    }
    out << "fiber: g = " << d.g << (inv.compact_jacobian ? ", compact Jacobian" : ", non-compact Jacobian") << "\n";
    for (std::size_t i = 0; i < inv.delta.size(); ++i) out << "  delta_" << i << " = " << show(inv.delta[i]) << "\n";
    for (const auto& [genus, count] : inv.l) out << "  l_" << genus << " = " << count << "\n";
    out << "  l_h = " << inv.l_h << "\n";
    if (v.ok()) {
      out << "valid\n";
    } else {
      for (const auto& s : v.violations) out << "violation: " << s << "\n";
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

// ---------------------------------------------------------------------------
// thresholds

struct ThresholdLine {
  std::string scenario;
  std::string computed;   // engine finding
  std::string paper;      // stated bound
  bool agree = true;
  std::string discrepancy;
  std::vector<std::string> details;
};

inline ThresholdLine threshold_line(const std::string& scenario, long gmax) {
  require_scenario(scenario);
  ThresholdLine t;
  t.scenario = scenario;
  auto verified_from = [&](long g0) {
    const auto ok = verify_certificate(build_certificate(scenario, g0));
    t.details.push_back(std::string("certificate over g >= ") + std::to_string(g0) + (ok ? " verified" : " FAILED"));
    return ok;
  };
  if (scenario == "family-strict-arakelov") {
    const long certified = min_genus(coefficient_family("F1-certified"));
    const long displayed = min_genus(coefficient_family("F1"));
    t.computed = std::to_string(certified);
    t.paper = "g>4";
    t.agree = certified == 5 && verified_from(certified);
    t.details.push_back("penalty coefficient (g-4)/(4(g-1)); displayed (g-4)/g also positive from g = " +
                        std::to_string(displayed));
  } else if (scenario == "typeI-II") {
    const long certified = min_genus(coefficient_family("F2-certified"));
    const long displayed = min_genus(coefficient_family("F2"));
    t.computed = std::to_string(certified);
    t.paper = "g>11";
    t.agree = certified == 12 && verified_from(certified);
    if (displayed != certified)
      t.discrepancy = "displayed gap coefficient g(g^2-11g+2)/(2(5g^2-23g+6)) is positive from g = " +
                      std::to_string(displayed) + " (stronger than stated, unreviewed); the combination gives " +
                      "g^2-11g-2, positive from g = " + std::to_string(certified);
  } else if (scenario == "hyperelliptic-geodesic") {
    std::vector<bool> excluded(static_cast<std::size_t>(gmax) + 1, false);
    for (long g = 2; g <= gmax; ++g) excluded[g] = hyperelliptic_exclusion(g).excluded;
    long from = gmax + 1;
    while (from > 2 && excluded[from - 1]) --from;
    bool contiguous = true;
    for (long g = 2; g < from; ++g) contiguous = contiguous && !excluded[g];
    t.computed = from <= gmax ? "excluded for " + std::to_string(from) + ".." + std::to_string(gmax) : "none";
    t.paper = "g>7";
    t.agree = contiguous && from == 8;
    if (!t.agree) t.discrepancy = "engine exclusion starts at g = " + std::to_string(from);
  } else {
    const bool ok = verify_certificate(build_certificate("g3-nonhyper", 3));
    t.computed = std::string("g = 3 ") + (ok ? "certified" : "FAILED") +
                 ", g >= 5 by family-strict-arakelov, g = 4 by the equality-case argument";
    t.paper = "g>=3";
    t.agree = ok;
  }
  return t;
}

inline int cmd_thresholds(const std::optional<std::string>& scenario, long gmax, bool as_json, std::ostream& out,
                          std::ostream& err) {
  try {
    if (gmax < 2) throw Error(ErrorKind::OutOfRange, "--gmax must be at least 2");
    std::vector<std::string> ids = scenario ? std::vector<std::string>{*scenario} : scenario_ids();
    for (const auto& s : ids) require_scenario(s);
    json all = json::array();
    for (const auto& s : ids) {
      const auto t = threshold_line(s, gmax);
      if (as_json) {
        json j;
        j["scenario"] = t.scenario;
        j["computed"] = t.computed;
        j["paper"] = t.paper;
        j["agree"] = t.agree;
        j["discrepancy"] = t.discrepancy.empty() ? json(nullptr) : json(t.discrepancy);
        j["details"] = t.details;
        all.push_back(j);
        continue;
      }
      out << t.scenario << ": computed " << t.computed << ", paper " << t.paper << ", "
          << (t.agree ? "agree" : "DISAGREE");
      if (!t.discrepancy.empty()) out << "; DISCREPANCY logged";
      out << "\n";
      if (!t.discrepancy.empty()) out << "  discrepancy: " << t.discrepancy << "\n";
      for (const auto& d : t.details) out << "  " << d << "\n";
    }
    if (as_json) out << all.dump(2) << "\n";
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

// ---------------------------------------------------------------------------
// certify

inline json to_json(const Certificate& c, const Verification& v) {
  json j;
  j["command"] = "certify";
  j["scenario"] = c.scenario;
  j["g"] = c.g;
  json cases = json::array();
  for (const auto& cc : c.cases) {
    const Point at = cc.domain.ray ? Point(Rational(c.g)) : cc.domain.point();
    json k;
    k["label"] = cc.label;
    k["condition"] = cc.condition;
    k["domain"] = cc.domain.str();
    k["target"] = to_json(cc.target, at);
    json terms = json::array();
    for (const auto& t : cc.terms) {
      json e;
      e["form"] = to_json(t.form, at);
      e["multiplier"] = t.multiplier.str();
      e["multiplier_value"] = t.multiplier.evaluate(at).str();
      e["closing"] = t.closing;
      terms.push_back(e);
    }
    k["terms"] = terms;
    if (cc.penalty) k["penalty"] = to_json(*cc.penalty, at);
    cases.push_back(k);
  }
  j["cases"] = cases;
  j["notes"] = c.notes;
  j["verified"] = v.ok;
  j["diagnostics"] = v.diagnostics;
  return j;
}

inline int cmd_certify(const std::string& scenario, long g, const std::optional<std::string>& out_path, bool as_json,
                       std::ostream& out, std::ostream& err) {
  try {
    const auto cert = build_certificate(scenario, g);
    const auto v = check_certificate(cert);
    const json j = to_json(cert, v);
    if (out_path) {
      std::ofstream f(*out_path);
      if (!f) throw Error(ErrorKind::ParseError, "cannot write '" + *out_path + "'");
      f << j.dump(2) << "\n";
    }
    if (as_json) {
      out << j.dump(2) << "\n";
    } else {
      out << "certificate " << cert.scenario << " at g = " << cert.g << "\n";
      for (const auto& cc : cert.cases) {
        const Point at = cc.domain.ray ? Point(Rational(cert.g)) : cc.domain.point();
        out << "case: " << cc.label << " (" << cc.condition << "; " << cc.domain.str() << ")\n";
        for (const auto& t : cc.terms)
          out << "  " << std::left << std::setw(28) << t.form.id << " x " << t.multiplier.str() << "  = "
              << show(t.multiplier.evaluate(at)) << (t.closing ? "  (closing)" : "") << "\n";
        if (cc.penalty) {
          out << "  penalty: deg " << to_string(cc.penalty->rel) << " " << show(cc.penalty->rhs.at(sym::log_deg).evaluate(at))
              << " L";
          for (const auto& [s, c] : cc.penalty->rhs)
            if (s != sym::log_deg) out << " - " << show(-c.evaluate(at)) << " " << s;
          out << "\n";
        }
      }
      for (const auto& n : cert.notes) out << "note: " << n << "\n";
      out << (v.ok ? "verified" : "verification FAILED") << "\n";
      for (const auto& d : v.diagnostics) out << "  " << d << "\n";
    }
    return v.ok ? kOk : kViolated;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace fibred::cli
