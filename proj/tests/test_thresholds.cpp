#include <gtest/gtest.h>

#include <set>

#include "fibred/fibred.hpp"

using namespace fibred;

TEST(Catalog, IdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& f : coefficient_catalog()) EXPECT_TRUE(ids.insert(f.id).second) << f.id;
  EXPECT_THROW(coefficient_family("F42"), Error);
}

TEST(CauchyBound, ContainsEveryRoot) {
  // (g-3)(g+7) = g^2 + 4g - 21
  const long b = cauchy_bound({Rational(-21), Rational(4), Rational(1)});
  EXPECT_GE(b, 7);
  EXPECT_EQ(cauchy_bound({Rational(5)}), 0);
}

TEST(Positivity, StrictArakelovPenalty) {
  const auto f = coefficient_family("F1");
  EXPECT_EQ(min_genus(f), 5);
  EXPECT_EQ(min_genus(coefficient_family("F1-certified")), 5);
  const auto proof = positivity_on_ray(f, 5);
  EXPECT_TRUE(proof.proved());
  const auto fail = positivity_on_ray(f, 4);
  ASSERT_FALSE(fail.proved());
  EXPECT_EQ(*fail.counterexample, 4);
  EXPECT_TRUE(fail.counterexample_value->is_zero());
}

TEST(Positivity, TypeGap) {
  EXPECT_EQ(min_genus(coefficient_family("F2-certified")), 12);
  EXPECT_EQ(min_genus(coefficient_family("F2-certified-numerator")), 12);
  EXPECT_EQ(min_genus(coefficient_family("F2")), 11);
  EXPECT_EQ(min_genus(coefficient_family("F2-numerator")), 11);
}

TEST(Positivity, ProofAgreesWithEvaluation) {
  for (const char* id : {"F1", "F1-certified", "F2", "F2-certified", "F9-lambda", "F9-arakelov"}) {
    const auto f = coefficient_family(id);
    const long g0 = min_genus(f);
    const auto proof = positivity_on_ray(f, g0);
    ASSERT_TRUE(proof.proved()) << id;
    for (long g = g0; g <= 10 * std::max(proof.checked_upto, 10L); ++g)
      ASSERT_GT(f.expr.evaluate(Point(Rational(g))).sign(), 0) << id << " at " << g;
    if (g0 > f.g_min) {
      EXPECT_LE(f.expr.evaluate(Point(Rational(g0 - 1))).sign(), 0) << id;
    }
  }
}

TEST(Positivity, Errors) {
  const auto f = coefficient_family("F2");
  try {
    positivity_on_ray(f, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainViolation);
  }
  CoefficientFamily neg{"neg", "", RationalFunction(Rational(0)) - rf_g(), 2, {}, {}, {}, {}};
  try {
    min_genus(neg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NeverPositive);
  }
  EXPECT_THROW(min_genus(coefficient_family("F6")), Error);
}

TEST(Nonnegativity, AllowsZeros) {
  const auto f = rf_g() - RationalFunction(Rational(4));
  EXPECT_TRUE(nonnegativity_on_ray("g-4", f, 4).proved());
  EXPECT_FALSE(nonnegativity_on_ray("g-4", f, 3).proved());
}

TEST(MinimizeOverQ, ConcaveFamilyAtEndpoint) {
  const auto f = coefficient_family("F6");
  const auto m = minimize_over_q(f, 8);
  EXPECT_TRUE(m.concave);
  EXPECT_EQ(m.q, 2);
  // 4*2*(104-42+8) - 451 = 109
  EXPECT_EQ(m.value, Rational(109));
}

TEST(MinimizeOverQ, Errors) {
  try {
    minimize_over_q(coefficient_family("F4-betai"), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsupported);
  }
  try {
    minimize_over_q(coefficient_family("F6"), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainViolation);
  }
  try {
    minimize_over_q(coefficient_family("F5-xi"), 7, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyRange);
  }
}

TEST(SpecializeQ, RaisesDomainStart) {
  const auto f = coefficient_family("F8").specialize_q(3);
  EXPECT_FALSE(f.uses_q());
  EXPECT_EQ(f.g_min, 7);
}
