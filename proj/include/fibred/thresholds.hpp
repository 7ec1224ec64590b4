#pragma once

// Coefficient families in (g, q, i), positivity on integer rays and minimal
// genus computations.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibred/catalog.hpp"
#include "fibred/error.hpp"
#include "fibred/polynomial.hpp"

namespace fibred {

/// floor((cg*g + ci*i + c) / d), d > 0.
struct FloorBound {
  long cg = 0;
  long ci = 0;
  long c = 0;
  long d = 1;

  [[nodiscard]] long eval(long g, long i = 0) const {
    const long n = cg * g + ci * i + c;
    return n >= 0 ? n / d : -((-n + d - 1) / d);
  }
};

inline FloorBound constant_bound(long c) { return {0, 0, c, 1}; }

struct CoefficientFamily {
  std::string id;
  std::string description;
  RationalFunction expr;
  long g_min = 2;
  std::vector<FloorBound> q_lower;  // q >= max of these
  std::vector<FloorBound> q_upper;  // q <= min of these
  std::vector<FloorBound> i_lower;
  std::vector<FloorBound> i_upper;

  [[nodiscard]] bool uses_q() const { return expr.uses(Var::q); }
  [[nodiscard]] bool uses_i() const { return expr.uses(Var::i); }

  [[nodiscard]] std::optional<std::pair<long, long>> q_range(long g, long i = 0) const {
    return range(q_lower, q_upper, g, i);
  }
  [[nodiscard]] std::optional<std::pair<long, long>> i_range(long g) const {
    return range(i_lower, i_upper, g, 0);
  }

  /// The univariate family obtained by fixing q.
  [[nodiscard]] CoefficientFamily specialize_q(long q) const {
    CoefficientFamily out = *this;
    out.id = id + "[q=" + std::to_string(q) + "]";
    out.expr = expr.substitute(Var::q, Rational(q));
    out.q_lower.clear();
    out.q_upper.clear();
    // Keep only genera where q is admissible.
    while (out.g_min < 100000) {
      const auto r = q_range(out.g_min);
      if (r && r->first <= q && q <= r->second) break;
      ++out.g_min;
    }
    return out;
  }

 private:
  static std::optional<std::pair<long, long>> range(const std::vector<FloorBound>& lo,
                                                    const std::vector<FloorBound>& hi, long g, long i) {
    if (lo.empty() || hi.empty()) return std::nullopt;
    long a = lo.front().eval(g, i);
    for (const auto& b : lo) a = std::max(a, b.eval(g, i));
    long z = hi.front().eval(g, i);
    for (const auto& b : hi) z = std::min(z, b.eval(g, i));
    if (a > z) return std::nullopt;
    return std::make_pair(a, z);
  }
};

// ---------------------------------------------------------------------------
// Catalog

namespace families {

inline RationalFunction beta_1() {
  const auto g = rf_g();
  const auto q = rf_q();
  return (sc<RationalFunction>(2) * g + sc<RationalFunction>(1) - sc<RationalFunction>(3) * q) /
             (sc<RationalFunction>(2) * g + sc<RationalFunction>(1)) -
         sc<RationalFunction>(3) * (g - q) / (sc<RationalFunction>(4) * (g - sc<RationalFunction>(1)));
}

inline RationalFunction beta_i() {
  using S = RationalFunction;
  const auto g = rf_g();
  const auto q = rf_q();
  const auto i = rf_i();
  return (sc<S>(2) * g + sc<S>(1) - sc<S>(3) * q) * i * (g - i) / ((sc<S>(2) * g + sc<S>(1)) * (g - sc<S>(1))) -
         (g - q) / (g - sc<S>(1));
}

/// (2i+1)(2g+1-2i)/(g+1).
inline RationalFunction weight_i() {
  using S = RationalFunction;
  const auto g = rf_g();
  const auto i = rf_i();
  return (sc<S>(2) * i + sc<S>(1)) * (sc<S>(2) * g + sc<S>(1) - sc<S>(2) * i) / (g + sc<S>(1));
}

}  // namespace families

inline std::vector<CoefficientFamily> coefficient_catalog() {
  using S = RationalFunction;
  const auto g = rf_g();
  const auto q = rf_q();
  const auto i = rf_i();
  const S one = sc<S>(1);
  const FloorBound half_gm1{1, 0, -1, 2};   // floor((g-1)/2)
  const FloorBound half_g{1, 0, 0, 2};      // floor(g/2)
  const FloorBound half_gp1{1, 0, 1, 2};    // floor((g+1)/2)
  const FloorBound i_plus_1{0, 1, 1, 1};    // i + 1
  const FloorBound i_itself{0, 1, 0, 1};

  std::vector<CoefficientFamily> c;
  c.push_back({"F1", "strict Arakelov penalty as displayed: (g-4)/g", (g - sc<S>(4)) / g, 2, {}, {}, {}, {}});
  c.push_back({"F1-certified", "strict Arakelov penalty forced by the combination: (g-4)/(4(g-1))",
               (g - sc<S>(4)) / (sc<S>(4) * (g - one)), 2, {}, {}, {}, {}});
  const S K = sc<S>(5) * g * g - sc<S>(23) * g + sc<S>(6);
  c.push_back({"F2", "type I/II Arakelov gap as displayed: g(g^2-11g+2)/(2(5g^2-23g+6))",
               g * (g * g - sc<S>(11) * g + sc<S>(2)) / (sc<S>(2) * K), 7, {}, {}, {}, {}});
  c.push_back({"F2-certified", "type I/II Arakelov gap from the combination: g(g^2-11g-2)/(2(5g^2-23g+6))",
               g * (g * g - sc<S>(11) * g - sc<S>(2)) / (sc<S>(2) * K), 7, {}, {}, {}, {}});
  c.push_back({"F2-numerator", "g^2-11g+2", g * g - sc<S>(11) * g + sc<S>(2), 7, {}, {}, {}, {}});
  c.push_back({"F2-certified-numerator", "g^2-11g-2", g * g - sc<S>(11) * g - sc<S>(2), 7, {}, {}, {}, {}});
  const S four_g2 = sc<S>(4) * (g + one) * (g - one);
  c.push_back({"F3-alpha1", "alpha_1", (g * g - (sc<S>(6) * q + sc<S>(3)) * g + sc<S>(12) * q - sc<S>(4)) / four_g2,
               2, {constant_bound(0)}, {constant_bound(1)}, {}, {}});
  c.push_back({"F3-alphah", "alpha_h",
               (sc<S>(4) * g * g - (sc<S>(13) * q + sc<S>(12)) * g + sc<S>(37) * q - sc<S>(16)) / four_g2, 4,
               {constant_bound(0)}, {constant_bound(1)}, {}, {}});
  c.push_back({"F4-beta1", "beta_1", families::beta_1(), 2, {constant_bound(0)}, {half_gm1}, {}, {}});
  c.push_back({"F4-betai", "beta_i, 2 <= i <= g/2", families::beta_i(), 4, {constant_bound(0)}, {half_gm1},
               {constant_bound(2)}, {half_g}});
  c.push_back({"F5-xi", "xi_i = beta_i - i(2i+1)/3 beta_1, 2 <= i <= q-1",
               families::beta_i() - i * (sc<S>(2) * i + one) / sc<S>(3) * families::beta_1(), 7,
               {constant_bound(2), i_plus_1}, {half_gm1}, {constant_bound(2)}, {half_g}});
  c.push_back({"F5-eta", "eta_i = beta_i + (2i+1)(2g+1-2i)/(12(g+1)) beta_1, q <= i <= g/2",
               families::beta_i() + families::weight_i() / sc<S>(12) * families::beta_1(), 5,
               {constant_bound(2)}, {half_gm1, i_itself}, {constant_bound(2)}, {half_g}});
  c.push_back({"F6", "4q(13g-21q+8)-50g-51",
               sc<S>(4) * q * (sc<S>(13) * g - sc<S>(21) * q + sc<S>(8)) - sc<S>(50) * g - sc<S>(51), 5,
               {constant_bound(2)}, {half_gm1}, {}, {}});
  const S tg1 = sc<S>(2) * g + one;
  const S base = (g - one) * q / (tg1 * (g - q));
  const S a_head = sc<S>(4) * (sc<S>(2) * g - sc<S>(3) * q + one) * i * (g - i) / (tg1 * (g - q)) - one;
  const S c_head = sc<S>(2) * (sc<S>(2) * g - sc<S>(3) * q + one) * (i + one) * (g - i) / (tg1 * (g - q)) - sc<S>(2);
  c.push_back({"F7-a", "a_i, 1 <= i <= q-1", a_head + base * sc<S>(4) * i * (sc<S>(2) * i + one), 3,
               {constant_bound(1), i_plus_1}, {half_gp1}, {constant_bound(1)}, {half_g}});
  c.push_back({"F7-b", "b_i, q <= i <= g/2", a_head - base * families::weight_i(), 2, {constant_bound(1)},
               {half_gp1, i_itself}, {constant_bound(1)}, {half_g}});
  c.push_back({"F7-c", "c_j, 1 <= j <= q-1", c_head + base * sc<S>(2) * (i + one) * (sc<S>(2) * i + one), 3,
               {constant_bound(1), i_plus_1}, {half_gp1}, {constant_bound(1)}, {half_gm1}});
  c.push_back({"F7-d", "d_j, q <= j <= (g-1)/2",
               c_head - base * sc<S>(2) * (i + one) * (g - i) / (g + one), 3, {constant_bound(1)},
               {half_gp1, i_itself}, {constant_bound(1)}, {half_gm1}});
  c.push_back({"F8", "Theta = (g-4)(2g+1) - 3(2g-5)q", (g - sc<S>(4)) * tg1 - sc<S>(3) * (sc<S>(2) * g - sc<S>(5)) * q,
               2, {constant_bound(0)}, {half_gm1}, {}, {}});
  c.push_back({"F9-lambda", "(7g+6)/(2(g-2)g)", (sc<S>(7) * g + sc<S>(6)) / (sc<S>(2) * (g - sc<S>(2)) * g), 3, {},
               {}, {}, {}});
  c.push_back({"F9-arakelov", "2(g-1)g/(5g-6)", sc<S>(2) * (g - one) * g / (sc<S>(5) * g - sc<S>(6)), 2, {}, {}, {},
               {}});
  return c;
}

inline CoefficientFamily coefficient_family(const std::string& id) {
  for (auto& f : coefficient_catalog())
    if (f.id == id) return f;
  throw Error(ErrorKind::UnknownScenario, "unknown coefficient family '" + id + "'");
}

// ---------------------------------------------------------------------------
// Positivity on integer rays

/// Integer B with every real root of p (coefficients low to high) in [-B, B].
inline long cauchy_bound(const std::vector<Rational>& p) {
  std::size_t n = p.size();
  while (n > 0 && p[n - 1].is_zero()) --n;
  if (n <= 1) return 0;
  const Rational lead = abs(p[n - 1]);
  Rational m;
  for (std::size_t k = 0; k + 1 < n; ++k) m = std::max(m, abs(p[k]) / lead);
  return (Rational(1) + m).ceil().get_si();
}

inline Rational eval_poly(const std::vector<Rational>& p, const Rational& x) {
  Rational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

struct PositivityProof {
  std::string family_id;
  long g0 = 0;
  std::string method = "explicit-check-then-leading-sign";
  long checked_upto = 0;
  std::optional<long> counterexample;
  std::optional<Rational> counterexample_value;

  [[nodiscard]] bool proved() const { return !counterexample; }
};

namespace detail {

/// Sign test of a univariate rational function on integers g >= g0:
/// strict checks f > 0, otherwise f >= 0.
inline PositivityProof sign_on_ray(const std::string& id, const RationalFunction& f, long g0, bool strict) {
  PositivityProof proof;
  proof.family_id = id;
  proof.g0 = g0;
  if (f.uses(Var::q) || f.uses(Var::i))
    throw Error(ErrorKind::Unsupported, "positivity on a ray needs a family in g alone");
  const auto num = f.numerator().coefficients(Var::g);
  const auto den = f.denominator().coefficients(Var::g);
  // sign f = sign(num * den) wherever den != 0.
  const auto prod = (f.numerator() * f.denominator()).coefficients(Var::g);
  const long bound = std::max(cauchy_bound(prod), cauchy_bound(den));
  proof.checked_upto = std::max(g0, bound);
  auto fail = [&](long g, Rational v) {
    proof.counterexample = g;
    proof.counterexample_value = std::move(v);
    return proof;
  };
  for (long g = g0; g <= proof.checked_upto; ++g) {
    const Rational x(g);
    const Rational d = eval_poly(den, x);
    if (d.is_zero()) throw Error(ErrorKind::DomainViolation, "denominator vanishes at g = " + std::to_string(g));
    const Rational v = eval_poly(num, x) / d;
    if (strict ? v.sign() <= 0 : v.sign() < 0) return fail(g, v);
  }
  std::size_t n = prod.size();
  while (n > 0 && prod[n - 1].is_zero()) --n;
  const int lead_sign = n == 0 ? 0 : prod[n - 1].sign();
  if (strict ? lead_sign <= 0 : lead_sign < 0) {
    const long g = proof.checked_upto + 1;
    return fail(g, f.evaluate(Point(Rational(g))));
  }
  return proof;
}

}  // namespace detail

/// f(g) > 0 for every integer g >= g0, decided exactly.
inline PositivityProof positivity_on_ray(const CoefficientFamily& f, long g0) {
  if (g0 < f.g_min)
    throw Error(ErrorKind::DomainViolation,
                "g0 = " + std::to_string(g0) + " is below the domain start " + std::to_string(f.g_min));
  return detail::sign_on_ray(f.id, f.expr, g0, true);
}

inline PositivityProof nonnegativity_on_ray(const std::string& id, const RationalFunction& f, long g0) {
  return detail::sign_on_ray(id, f, g0, false);
}

/// Least g* in the domain such that f > 0 on every integer g >= g*.
inline long min_genus(const CoefficientFamily& f) {
  if (f.uses_q() || f.uses_i())
    throw Error(ErrorKind::Unsupported, "min_genus needs a family in g alone; specialise q first");
  const auto proof = detail::sign_on_ray(f.id, f.expr, f.g_min, true);
  if (proof.proved()) return f.g_min;
  // Past the root bound the sign is constant.
  const auto tail = detail::sign_on_ray(f.id, f.expr, proof.checked_upto + 1, true);
  if (!tail.proved()) throw Error(ErrorKind::NeverPositive, f.id + " is not eventually positive");
  long g_star = proof.checked_upto + 1;
  while (g_star > f.g_min && f.expr.evaluate(Point(Rational(g_star - 1))).sign() > 0) --g_star;
  return g_star;
}

// ---------------------------------------------------------------------------
// Minimisation over q

struct QMinimum {
  long q = 0;
  Rational value;
  bool concave = false;
};

/// Minimum over the admissible integers q at fixed g (and i when the family
/// depends on it), for families of degree <= 2 in q with q-free denominator.
inline QMinimum minimize_over_q(const CoefficientFamily& f, long g, std::optional<long> i = std::nullopt) {
  if (f.uses_i() && !i) throw Error(ErrorKind::Unsupported, f.id + " depends on i; fix i first");
  if (g < f.g_min) throw Error(ErrorKind::DomainViolation, "g below the domain of " + f.id);
  const auto range = f.q_range(g, i.value_or(0));
  if (!range) throw Error(ErrorKind::EmptyRange, "no admissible q for " + f.id + " at g = " + std::to_string(g));
  RationalFunction at = f.expr.substitute(Var::g, Rational(g));
  if (i) at = at.substitute(Var::i, Rational(*i));
  if (at.denominator().uses(Var::q))
    throw Error(ErrorKind::Unsupported, f.id + " has q in its denominator");
  const Rational den = at.denominator().constant_term();
  std::vector<Rational> p = at.numerator().coefficients(Var::q);
  if (p.size() > 3) throw Error(ErrorKind::Unsupported, f.id + " has degree > 2 in q");
  for (auto& c : p) c /= den;
  p.resize(3, Rational(0));

  const auto [lo, hi] = *range;
  std::vector<long> candidates{lo, hi};
  QMinimum best;
  best.concave = p[2].sign() <= 0;
  if (p[2].sign() > 0) {
    const Rational vertex = -p[1] / (Rational(2) * p[2]);
    for (long c : {vertex.floor().get_si(), vertex.ceil().get_si()})
      if (c > lo && c < hi) candidates.push_back(c);
  }
  std::sort(candidates.begin(), candidates.end());
  bool first = true;
  for (long q : candidates) {
    const Rational v = eval_poly(p, Rational(q));
    if (first || v < best.value) {
      best.q = q;
      best.value = v;
      first = false;
    }
  }
  return best;
}

}  // namespace fibred
