#pragma once

// Cornalba-Harris calculus for semi-stable hyperelliptic families.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fibred/affine.hpp"
#include "fibred/error.hpp"
#include "fibred/invariants.hpp"
#include "fibred/rational.hpp"

namespace fibred {

namespace detail {

inline Rational at(const RationalVector& v, int k) {
  return k >= 0 && k < static_cast<int>(v.size()) ? v[k] : Rational(0);
}

inline void check_vectors(int g, const RationalVector& xi, const RationalVector& delta) {
  if (g < 2) throw Error(ErrorKind::InvalidFamily, "fiber genus must be at least 2");
  if (static_cast<int>(delta.size()) > max_delta_index(g) + 1)
    throw Error(ErrorKind::IndexOutOfRange, "delta has entries beyond floor(g/2)");
  if (static_cast<int>(xi.size()) > max_xi_index(g) + 1)
    throw Error(ErrorKind::IndexOutOfRange, "xi has entries beyond floor((g-1)/2)");
}

}  // namespace detail

/// deg f_*omega from the boundary data of a hyperelliptic family.
inline Rational ch_degree(int g, const RationalVector& xi, const RationalVector& delta) {
  detail::check_vectors(g, xi, delta);
  const Rational two_g_1(2 * g + 1);
  Rational d = Rational(g) * detail::at(xi, 0) / (Rational(4) * two_g_1);
  for (int i = 1; i <= max_delta_index(g); ++i)
    d += Rational(i * (g - i)) * detail::at(delta, i) / two_g_1;
  for (int j = 1; j <= max_xi_index(g); ++j)
    d += Rational((j + 1) * (g - j)) * detail::at(xi, j) / (Rational(2) * two_g_1);
  return d;
}

inline Rational ch_omega_sq(int g, const RationalVector& xi, const RationalVector& delta) {
  detail::check_vectors(g, xi, delta);
  const Rational two_g_1(2 * g + 1);
  Rational w = Rational(g - 1) * detail::at(xi, 0) / two_g_1;
  for (int i = 1; i <= max_delta_index(g); ++i)
    w += (Rational(12 * i * (g - i)) / two_g_1 - Rational(1)) * detail::at(delta, i);
  for (int j = 1; j <= max_xi_index(g); ++j)
    w += (Rational(6 * (j + 1) * (g - j)) / two_g_1 - Rational(2)) * detail::at(xi, j);
  return w;
}

/// xi_0 + sum_{i>=1} delta_i + 2 sum_{j>=1} xi_j.
inline Rational delta_f_hyper(const RationalVector& xi, const RationalVector& delta) {
  Rational d = detail::at(xi, 0);
  for (std::size_t i = 1; i < delta.size(); ++i) d += delta[i];
  for (std::size_t j = 1; j < xi.size(); ++j) d += Rational(2) * xi[j];
  return d;
}

/// Relative invariants of a hyperelliptic family from its boundary data.
inline RelativeInvariants hyperelliptic_relative(int g, const RationalVector& xi,
                                                 const RationalVector& delta) {
  return {ch_omega_sq(g, xi, delta), delta_f_hyper(xi, delta), ch_degree(g, xi, delta)};
}

/// Node indices on the (2g+2)-pointed rational base of an admissible double
/// cover, with multiplicities.
struct IndexMultiset {
  std::vector<std::pair<int, int>> entries;  // (index, multiplicity)
};

struct BoundaryVectors {
  RationalVector delta;
  RationalVector xi;
};

inline BoundaryVectors invariants_from_indices(int g, const IndexMultiset& m) {
  if (g < 2) throw Error(ErrorKind::InvalidFamily, "fiber genus must be at least 2");
  std::map<int, long> eps;  // odd index 2k+1
  std::map<int, long> nu;   // even index 2k+2
  for (const auto& [index, mult] : m.entries) {
    if (index < 2 || index > g + 1)
      throw Error(ErrorKind::IndexOutOfRange,
                  "node index " + std::to_string(index) + " outside [2, g+1]");
    if (mult < 1) throw Error(ErrorKind::InvalidFamily, "index multiplicity must be >= 1");
    if (index % 2 == 1) {
      eps[(index - 1) / 2] += mult;
    } else {
      nu[(index - 2) / 2] += mult;
    }
  }
  BoundaryVectors out{zero_delta(g), zero_xi(g)};
  for (const auto& [k, e] : eps) {
    if (e % 2 != 0)
      throw Error(ErrorKind::ParityViolation,
                  "epsilon_" + std::to_string(k) + " = " + std::to_string(e) + " is odd");
    out.delta[k] = Rational(e / 2);
  }
  for (const auto& [k, n] : nu) out.xi[k] = k == 0 ? Rational(2 * n) : Rational(n);
  out.delta[0] = out.xi[0] + Rational(2) * sum(out.xi, 1);
  return out;
}

/// (2i+1)(2g+1-2i)/(g+1), the upper-index weight of the xi_0 bound.
inline Rational xi0_weight(int g, int i) {
  return Rational((2 * i + 1) * (2 * g + 1 - 2 * i), g + 1);
}

/// Structural bound on xi_0 for hyperelliptic families with q_f > 0.
inline SlackReport xi0_bound_check(int g, int q_f, const RationalVector& xi, const RationalVector& delta) {
  detail::check_vectors(g, xi, delta);
  if (q_f < 1) throw Error(ErrorKind::OutOfRange, "the xi_0 bound needs q_f >= 1");
  Rational upper;
  Rational lower = detail::at(xi, 0);
  for (int i = 1; i <= max_delta_index(g); ++i) {
    if (i >= q_f) {
      upper += xi0_weight(g, i) * detail::at(delta, i);
    } else {
      lower += Rational(4 * i * (2 * i + 1)) * detail::at(delta, i);
    }
  }
  for (int j = 1; j <= max_xi_index(g); ++j) {
    if (j >= q_f) {
      upper += Rational(2 * (j + 1) * (g - j), g + 1) * detail::at(xi, j);
    } else {
      lower += Rational(2 * (j + 1) * (2 * j + 1)) * detail::at(xi, j);
    }
  }
  // Stated as lower <= upper.
  return make_report("xi0_bound", lower, upper, Relation::Le);
}

struct IrregularityBound {
  Rational bound;   // q_f <= bound
  long floor = 0;   // largest admissible integer
  /// q_f equal to the bound forces an isotrivial family.
  bool equality_isotrivial = false;
};

inline IrregularityBound qf_bound(int g, int d) {
  if (d < 2) throw Error(ErrorKind::InvalidDegree, "degree d = F.F' must be at least 2");
  IrregularityBound b;
  b.bound = Rational(g - 1, d) + Rational(1);
  b.floor = b.bound.floor().get_si();
  b.equality_isotrivial = b.bound.is_integer();
  return b;
}

/// Pulled-back degrees of Xi_j and Delta_i, after checking delta_0.
inline std::vector<std::pair<std::string, Rational>> hyperelliptic_divisor_degrees(const FamilyData& fam) {
  if (!fam.hyperelliptic) throw Error(ErrorKind::NotHyperelliptic, "family is not hyperelliptic");
  const Rational rhs = detail::at(fam.xi, 0) + Rational(2) * sum(fam.xi, 1);
  if (detail::at(fam.delta, 0) != rhs)
    throw Error(ErrorKind::Delta0Mismatch,
                "delta_0 = " + detail::at(fam.delta, 0).str() + " but xi_0 + 2*sum xi_j = " + rhs.str());
  std::vector<std::pair<std::string, Rational>> out;
  for (std::size_t j = 0; j < fam.xi.size(); ++j) out.emplace_back("Xi_" + std::to_string(j), fam.xi[j]);
  for (std::size_t i = 1; i < fam.delta.size(); ++i)
    out.emplace_back("Delta_" + std::to_string(i), fam.delta[i]);
  return out;
}

}  // namespace fibred
