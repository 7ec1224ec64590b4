#pragma once

// The inequality catalog as affine forms. Builders are templated on the
// scalar so the same code yields numeric forms (S = Rational, concrete g) and
// symbolic ones (S = RationalFunction, g and q as variables).

#include <string>
#include <vector>

#include "fibred/affine.hpp"
#include "fibred/invariants.hpp"

namespace fibred {

namespace sym {
inline const std::string omega_sq = "omega_sq";
inline const std::string deg = "deg";
inline const std::string delta_f = "delta_f";
inline const std::string log_deg = "L";
inline const std::string lambda = "Lambda";
inline const std::string delta_h = "delta_h";
inline const std::string delta_ct_h = "delta_ct_h";
inline const std::string h = "h";
// Per-fiber sums over compact-type fibers.
inline const std::string t_lambda = "T_lambda";              // over Lambda: l_h + l_1 - 1
inline const std::string t_rest = "T_rest";                  // off Lambda: 3l_h + 2l_1 - 3
inline const std::string t_ct = "T_ct";                      // all: 3l_h + 2l_1 - 3
inline const std::string t_lambda_prime = "T_lambda_prime";  // class lambda_prime: l_h + l_1 - 1
inline const std::string n_ct_b = "n_ct_b";
inline const std::string t_ub = "T_ub";                      // class ct_ub: 3l_h + 2l_1 - 3

inline std::string delta(int i) { return "delta_" + std::to_string(i); }
inline std::string delta_ct(int i) { return "delta_ct_" + std::to_string(i); }
inline std::string xi(int j) { return "xi_" + std::to_string(j); }
}  // namespace sym

template <class S>
S sc(long n, long d = 1) {
  return S(Rational(n, d));
}

/// omega^2 <= (2g-2) L + 2 delta_1(ct) + 3 delta_h(ct).
template <class S>
AffineForm<S> my1_form(const S& g) {
  AffineForm<S> f;
  f.id = "my1";
  f.left(sym::omega_sq, sc<S>(1));
  f.right(sym::log_deg, sc<S>(2) * g - sc<S>(2));
  f.right(sym::delta_ct(1), sc<S>(2));
  f.right(sym::delta_ct_h, sc<S>(3));
  f.hypotheses = {"non-isotrivial"};
  return f;
}

/// 4(g-1)/g deg + (3g-4)/g delta_1 + (7g-16)/g delta_h <= omega^2.
template <class S>
AffineForm<S> moriwaki_form(const S& g) {
  AffineForm<S> f;
  f.id = "moriwaki";
  f.left(sym::deg, sc<S>(4) * (g - sc<S>(1)) / g);
  f.left(sym::delta(1), (sc<S>(3) * g - sc<S>(4)) / g);
  f.left(sym::delta_h, (sc<S>(7) * g - sc<S>(16)) / g);
  f.right(sym::omega_sq, sc<S>(1));
  f.hypotheses = {"non-isotrivial"};
  return f;
}

template <class S>
S sharp1_nc_a1(const S& g, const S& q) {
  return (sc<S>(3) * g * g - (sc<S>(8) * q + sc<S>(1)) * g + sc<S>(10) * q - sc<S>(4)) /
         ((g + sc<S>(1)) * (g - q));
}
template <class S>
S sharp1_nc_ah(const S& g, const S& q) {
  return (sc<S>(7) * g * g - (sc<S>(16) * q + sc<S>(9)) * g + sc<S>(34) * q - sc<S>(16)) /
         ((g + sc<S>(1)) * (g - q));
}

/// Hyperelliptic slope inequality, branch with non-compact fibers present.
template <class S>
AffineForm<S> sharp1_nc_form(const S& g, const S& q) {
  AffineForm<S> f;
  f.id = "sharp1";
  f.left(sym::deg, sc<S>(4) * (g - sc<S>(1)) / (g - q));
  f.left(sym::delta(1), sharp1_nc_a1(g, q));
  f.left(sym::delta_h, sharp1_nc_ah(g, q));
  f.right(sym::omega_sq, sc<S>(1));
  f.hypotheses = {"hyperelliptic", "non-isotrivial", "Delta_nc nonempty"};
  return f;
}

/// 4(2g+1-3q) i(g-i) / ((2g+1)(g-q)) - 1.
template <class S>
S sharp1_c_coefficient(const S& g, const S& q, int i) {
  const S ii = sc<S>(i);
  return sc<S>(4) * (sc<S>(2) * g + sc<S>(1) - sc<S>(3) * q) * ii * (g - ii) /
             ((sc<S>(2) * g + sc<S>(1)) * (g - q)) -
         sc<S>(1);
}

/// Hyperelliptic slope inequality, branch without non-compact fibers.
template <class S>
AffineForm<S> sharp1_c_form(int g, const S& q) {
  const S gs = sc<S>(g);
  AffineForm<S> f;
  f.id = "sharp1";
  f.left(sym::deg, sc<S>(4) * (gs - sc<S>(1)) / (gs - q));
  for (int i = 1; i <= max_delta_index(g); ++i) f.left(sym::delta(i), sharp1_c_coefficient(gs, q, i));
  f.right(sym::omega_sq, sc<S>(1));
  f.hypotheses = {"hyperelliptic", "non-isotrivial", "Delta_nc empty"};
  return f;
}

/// sum_{i<q} 4i(2i+1) delta_i <= sum_{i>=q} (2i+1)(2g+1-2i)/(g+1) delta_i.
template <class S>
AffineForm<S> sharp1_prime_form(int g, int q) {
  AffineForm<S> f;
  f.id = "sharp1_prime";
  for (int i = 1; i <= max_delta_index(g); ++i) {
    if (i < q) {
      f.left(sym::delta(i), sc<S>(4L * i * (2 * i + 1)));
    } else {
      f.right(sym::delta(i), sc<S>(static_cast<long>(2 * i + 1) * (2 * g + 1 - 2 * i), g + 1));
    }
  }
  f.hypotheses = {"hyperelliptic", "Delta_nc empty", "q_f >= 2"};
  return f;
}

/// Miyaoka-Yau II for families representing a non-hyperelliptic Torelli curve.
template <class S>
AffineForm<S> my2_form(const S& g) {
  AffineForm<S> f;
  f.id = "my2";
  f.left(sym::omega_sq, sc<S>(1));
  f.right(sym::log_deg, sc<S>(2) * g - sc<S>(2));
  f.right(sym::t_lambda, sc<S>(3, 2));
  f.right(sym::t_rest, sc<S>(1));
  f.hypotheses = {"g >= 7", "torelli_representing", "non_hyperelliptic_torelli"};
  return f;
}

template <class S>
AffineForm<S> sharp2_form(const S& g) {
  AffineForm<S> f;
  f.id = "sharp2";
  f.left(sym::deg, (sc<S>(5) * g - sc<S>(6)) / g);
  f.left(sym::lambda, sc<S>(2) * (g - sc<S>(2)));
  f.left(sym::t_lambda, sc<S>(2));
  f.left(sym::t_rest, sc<S>(1));
  f.right(sym::omega_sq, sc<S>(1));
  f.hypotheses = {"g >= 3", "torelli_representing", "non_hyperelliptic_torelli", "pushforward_semistable"};
  return f;
}

template <class S>
AffineForm<S> nonhyper_lower_form(const S& g) {
  AffineForm<S> f;
  f.id = "nonhyper_lower";
  f.left(sym::deg, (sc<S>(5) * g - sc<S>(6)) / g);
  f.left(sym::t_ct, sc<S>(1));
  f.right(sym::omega_sq, sc<S>(1));
  f.hypotheses = {"non-hyperelliptic", "pushforward_semistable"};
  return f;
}

/// Refined Miyaoka-Yau bound using tagged compact-type fiber classes.
template <class S>
AffineForm<S> refined_upper_form(const S& g) {
  AffineForm<S> f;
  f.id = "my1_refined";
  f.left(sym::omega_sq, sc<S>(1));
  f.right(sym::log_deg, sc<S>(2) * g - sc<S>(2));
  f.right(sym::t_lambda_prime, sc<S>(3, 2));
  f.right(sym::n_ct_b, sc<S>(2) * g - sc<S>(2) - (g - sc<S>(1)) / sc<S>(6));
  f.right(sym::t_ub, sc<S>(1));
  f.hypotheses = {"every compact-type fiber tagged"};
  return f;
}

/// 12 deg = omega^2 + delta_f.
template <class S>
AffineForm<S> noether_form() {
  AffineForm<S> f;
  f.id = "noether";
  f.rel = Relation::Eq;
  f.left(sym::deg, sc<S>(12));
  f.right(sym::omega_sq, sc<S>(1));
  f.right(sym::delta_f, sc<S>(1));
  return f;
}

/// delta_f = delta_0 + delta_1 + delta_h.
template <class S>
AffineForm<S> delta_f_sum_form() {
  AffineForm<S> f;
  f.id = "delta_f_sum";
  f.rel = Relation::Eq;
  f.left(sym::delta_f, sc<S>(1));
  f.right(sym::delta(0), sc<S>(1));
  f.right(sym::delta(1), sc<S>(1));
  f.right(sym::delta_h, sc<S>(1));
  return f;
}

/// delta_h = sum_{i>=2} delta_i.
template <class S>
AffineForm<S> delta_h_sum_form(int g) {
  AffineForm<S> f;
  f.id = "delta_h_sum";
  f.rel = Relation::Eq;
  f.left(sym::delta_h, sc<S>(1));
  for (int i = 2; i <= max_delta_index(g); ++i) f.right(sym::delta(i), sc<S>(1));
  return f;
}

/// delta_1(ct) <= delta_1 (which = "1") or delta_h(ct) <= delta_h (which = "h").
template <class S>
AffineForm<S> ct_bound_form(const std::string& which) {
  AffineForm<S> f;
  f.id = "ct_bound_" + which;
  if (which == "h") {
    f.left(sym::delta_ct_h, sc<S>(1));
    f.right(sym::delta_h, sc<S>(1));
  } else {
    f.left(sym::delta_ct(1), sc<S>(1));
    f.right(sym::delta(1), sc<S>(1));
  }
  return f;
}

/// 0 <= x.
template <class S>
AffineForm<S> nonneg_form(const std::string& symbol) {
  AffineForm<S> f;
  f.id = "nonneg_" + symbol;
  f.right(symbol, sc<S>(1));
  return f;
}

/// 0 < sum of the given symbols.
template <class S>
AffineForm<S> positive_sum_form(const std::string& id, const std::vector<std::string>& symbols,
                                std::string hypothesis) {
  AffineForm<S> f;
  f.id = id;
  f.rel = Relation::Lt;
  for (const auto& s : symbols) f.right(s, sc<S>(1));
  f.hypotheses = {std::move(hypothesis)};
  return f;
}

/// deg = h/9 + delta_0/9 + delta_1/3 (genus 3, non-hyperelliptic).
template <class S>
AffineForm<S> g3_degree_form() {
  AffineForm<S> f;
  f.id = "g3_degree";
  f.rel = Relation::Eq;
  f.left(sym::deg, sc<S>(1));
  f.right(sym::h, sc<S>(1, 9));
  f.right(sym::delta(0), sc<S>(1, 9));
  f.right(sym::delta(1), sc<S>(1, 3));
  return f;
}

/// omega^2 = 4h/3 + delta_0/3 + 3 delta_1 (genus 3, non-hyperelliptic).
template <class S>
AffineForm<S> g3_omega_form() {
  AffineForm<S> f;
  f.id = "g3_omega";
  f.rel = Relation::Eq;
  f.left(sym::omega_sq, sc<S>(1));
  f.right(sym::h, sc<S>(4, 3));
  f.right(sym::delta(0), sc<S>(1, 3));
  f.right(sym::delta(1), sc<S>(3));
  return f;
}

/// deg rel (rank/2) * (L - Lambda); the Arakelov bound in its strict form by default.
template <class S>
AffineForm<S> arakelov_form(const S& rank, bool subtract_lambda = false, Relation rel = Relation::Lt) {
  AffineForm<S> f;
  f.id = "strict_arakelov";
  f.rel = rel;
  f.left(sym::deg, sc<S>(1));
  f.right(sym::log_deg, rank / sc<S>(2));
  if (subtract_lambda) f.right(sym::lambda, -(rank / sc<S>(2)));
  return f;
}

}  // namespace fibred
