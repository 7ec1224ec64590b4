#include <gtest/gtest.h>

#include "fibred/fibred.hpp"

using namespace fibred;

TEST(Rational, ParsesAndNormalises) {
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_EQ(Rational::parse(" -2 "), Rational(-2));
  EXPECT_EQ(Rational::parse("+5/1").str(), "5");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, FloorCeilOnNegatives) {
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, ExactBeyondMachineWords) {
  Rational big(1);
  for (int k = 0; k < 40; ++k) big *= Rational(1000003);
  EXPECT_EQ(big / big, Rational(1));
  EXPECT_EQ((big + Rational(1, 3)) - big, Rational(1, 3));
}

TEST(Polynomial, EvaluateAndSubstitute) {
  const auto g = Polynomial::variable(Var::g);
  const auto q = Polynomial::variable(Var::q);
  const Polynomial p = g * g - q * Polynomial(3) + Polynomial(1);
  EXPECT_EQ(p.evaluate(Point(Rational(4), Rational(2))), Rational(11));
  EXPECT_EQ(p.substitute(Var::q, Rational(0)).evaluate(Point(Rational(5))), Rational(26));
  EXPECT_EQ(p.degree(Var::g), 2);
  EXPECT_EQ(p.degree(Var::q), 1);
}

TEST(RationalFunction, ReducesCommonFactors) {
  const auto g = rf_g();
  const RationalFunction one(Rational(1));
  const auto f = (g * g - one) / (g - one);
  EXPECT_EQ(f, g + one);
  EXPECT_TRUE(f.denominator().is_constant());
  EXPECT_EQ(f.evaluate(Point(Rational(9))), Rational(10));
}

TEST(RationalFunction, EqualityIsSemantic) {
  const auto g = rf_g();
  const RationalFunction two(Rational(2));
  EXPECT_EQ((two * g) / (two * g * g), RationalFunction(Rational(1)) / g);
  EXPECT_FALSE(g / (g + two) == g / (g + RationalFunction(Rational(3))));
}

TEST(AffineForm, NormalFormAndEvaluation) {
  const auto f = my1_form(Rational(3));
  const auto n = normal_form(f);
  EXPECT_EQ(n.lhs.at("omega_sq"), Rational(1));
  EXPECT_EQ(n.lhs.at("L"), Rational(-4));
  const auto r = evaluate(f, {{"omega_sq", Rational(12)}, {"L", Rational(2)}, {"delta_ct_1", Rational(0)}, {"delta_ct_h", Rational(0)}});
  EXPECT_EQ(r.slack, Rational(-4));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.verdict(), "violated");
}

TEST(AffineForm, InstantiateMatchesNumericBuilder) {
  const auto sym = instantiate(moriwaki_form(rf_g()), Point(Rational(7)));
  const auto num = moriwaki_form(Rational(7));
  EXPECT_EQ(normal_form(sym).lhs, normal_form(num).lhs);
}

TEST(SlackReport, RelationSemantics) {
  EXPECT_TRUE(make_report("a", Rational(1), Rational(1), Relation::Le).holds);
  EXPECT_EQ(make_report("a", Rational(1), Rational(1), Relation::Le).verdict(), "holds at equality");
  EXPECT_FALSE(make_report("a", Rational(1), Rational(1), Relation::Lt).holds);
  EXPECT_EQ(make_report("a", Rational(1), Rational(1), Relation::Lt).verdict(), "violated (boundary case)");
  EXPECT_TRUE(make_report("a", Rational(2), Rational(2), Relation::Eq).holds);
  EXPECT_EQ(not_applicable("x", "why").verdict(), "not applicable");
}
