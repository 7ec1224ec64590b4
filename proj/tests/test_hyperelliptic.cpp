#include <gtest/gtest.h>

#include "fibred/fibred.hpp"

using namespace fibred;

TEST(CornalbaHarris, GenusThreeExample) {
  const RationalVector xi{8, 0};
  const RationalVector delta{8, 4};
  EXPECT_EQ(ch_degree(3, xi, delta), Rational(2));
  EXPECT_EQ(ch_omega_sq(3, xi, delta), Rational(12));
  EXPECT_EQ(delta_f_hyper(xi, delta), Rational(12));
  EXPECT_TRUE(noether_residual(hyperelliptic_relative(3, xi, delta)).is_zero());
}

TEST(CornalbaHarris, GenusFourExample) {
  const RationalVector xi{0, 0};
  const RationalVector delta{0, 12, 0};
  const auto rel = hyperelliptic_relative(4, xi, delta);
  EXPECT_EQ(rel.deg_pushforward, Rational(4));
  EXPECT_EQ(rel.omega_rel_sq, Rational(36));
  EXPECT_EQ(rel.delta_f, Rational(12));
}

TEST(CornalbaHarris, FractionalCoefficients) {
  // A single xi_0 node in genus 2: g/(4(2g+1)) = 1/10.
  EXPECT_EQ(ch_degree(2, {1}, {1, 0}), Rational(1, 10));
  EXPECT_EQ(ch_omega_sq(2, {1}, {1, 0}), Rational(1, 5));
}

TEST(CornalbaHarris, OversizeVectors) {
  try {
    ch_degree(3, {1, 0, 0}, {1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
}

TEST(Indices, OddAndEvenIndices) {
  const auto a = invariants_from_indices(3, {{{3, 2}}});
  EXPECT_EQ(a.delta, (RationalVector{0, 1}));
  const auto b = invariants_from_indices(3, {{{2, 4}}});
  EXPECT_EQ(b.xi, (RationalVector{8, 0}));
  EXPECT_EQ(b.delta, (RationalVector{8, 0}));
  const auto c = invariants_from_indices(4, {{{4, 1}}});
  EXPECT_EQ(c.xi, (RationalVector{0, 1}));
  EXPECT_EQ(c.delta[0], Rational(2));
}

TEST(Indices, Rejections) {
  auto kind = [](int g, IndexMultiset m) {
    try {
      invariants_from_indices(g, m);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Unsupported;
  };
  EXPECT_EQ(kind(3, {{{3, 1}}}), ErrorKind::ParityViolation);
  EXPECT_EQ(kind(3, {{{5, 1}}}), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind(3, {{{1, 2}}}), ErrorKind::IndexOutOfRange);
}

TEST(Xi0Bound, WeightsAndCheck) {
  EXPECT_EQ(xi0_weight(3, 1), Rational(15, 4));
  const auto r = xi0_bound_check(3, 1, {8, 0}, {8, 4});
  EXPECT_EQ(r.id, "xi0_bound");
  try {
    xi0_bound_check(3, 0, {8, 0}, {8, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
}

TEST(IrregularityBound, FloorAndEquality) {
  const auto a = qf_bound(3, 2);
  EXPECT_EQ(a.bound, Rational(2));
  EXPECT_EQ(a.floor, 2);
  EXPECT_TRUE(a.equality_isotrivial);
  const auto b = qf_bound(8, 2);
  EXPECT_EQ(b.bound, Rational(9, 2));
  EXPECT_EQ(b.floor, 4);
  EXPECT_FALSE(b.equality_isotrivial);
  EXPECT_THROW(qf_bound(5, 1), Error);
}

TEST(DivisorDegrees, NeedHyperellipticFamily) {
  auto fam = make_family(3, 0, false);
  EXPECT_THROW(hyperelliptic_divisor_degrees(fam), Error);
  fam.hyperelliptic = true;
  fam.xi = {8, 0};
  fam.delta = {8, 4};
  const auto d = hyperelliptic_divisor_degrees(fam);
  EXPECT_FALSE(d.empty());
}
