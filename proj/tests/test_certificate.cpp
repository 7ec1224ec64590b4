#include <gtest/gtest.h>

#include "fibred/fibred.hpp"

using namespace fibred;

namespace {

std::vector<long> sample_genera(const std::string& scenario, std::size_t n) {
  const auto [lo, hi] = scenario_range(scenario);
  const long top = hi.value_or(lo + 60);
  std::vector<long> gs;
  for (long g = lo; g <= top && gs.size() < n; g += std::max(1L, (top - lo + 1) / static_cast<long>(n))) gs.push_back(g);
  return gs;
}

}  // namespace

TEST(Certificate, RoundTripEveryScenario) {
  for (const auto& s : scenario_ids()) {
    for (long g : sample_genera(s, 20)) {
      const auto cert = build_certificate(s, g);
      const auto v = check_certificate(cert);
      EXPECT_TRUE(v.ok) << s << " at g = " << g << ": " << (v.diagnostics.empty() ? "" : v.diagnostics.front());
    }
  }
}

TEST(Certificate, OutOfRange) {
  for (const auto& s : scenario_ids()) {
    const long below = scenario_range(s).first - 1;
    try {
      build_certificate(s, below);
      ADD_FAILURE() << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::OutOfRange) << s;
    }
  }
  try {
    build_certificate("g3-nonhyper", 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
}

TEST(Certificate, UnknownScenario) {
  try {
    build_certificate("typeIII", 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownScenario);
  }
}

TEST(Certificate, NegatedMultiplierFails) {
  auto cert = build_certificate("typeI-II", 20);
  ASSERT_FALSE(cert.cases.empty());
  auto& terms = cert.cases.front().terms;
  std::size_t k = 0;
  while (k < terms.size() && terms[k].form.rel == Relation::Eq) ++k;
  ASSERT_LT(k, terms.size());
  terms[k].multiplier = RationalFunction(Rational(0)) - terms[k].multiplier;
  EXPECT_FALSE(verify_certificate(cert));
}

TEST(Certificate, DroppedTermFails) {
  auto cert = build_certificate("family-strict-arakelov", 9);
  cert.cases.back().terms.pop_back();
  const auto v = check_certificate(cert);
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.diagnostics.empty());
}

TEST(Certificate, EmptyCombinationProvesTrivialTarget) {
  Certificate cert;
  cert.scenario = "manual";
  CertificateCase c;
  c.label = "zero";
  c.domain.ray = false;
  c.domain.g = 5;
  c.target.id = "zero";
  c.target.rel = Relation::Le;
  cert.cases.push_back(c);
  EXPECT_TRUE(verify_certificate(cert));
  cert.cases.front().target.rel = Relation::Lt;
  EXPECT_FALSE(verify_certificate(cert));
}

TEST(Certificate, GenusThreePenalty) {
  const auto cert = build_certificate("g3-nonhyper", 3);
  ASSERT_EQ(cert.cases.size(), 1u);
  ASSERT_TRUE(cert.cases.front().penalty);
  const auto pen = normal_form(*cert.cases.front().penalty);
  const Point at(Rational(3));
  // deg <= 3/2 L - 7/18 h - 1/72 delta_0 - 1/24 delta_1
  EXPECT_EQ(pen.lhs.at(sym::h).evaluate(at), Rational(7, 18));
  EXPECT_EQ(pen.lhs.at(sym::delta(0)).evaluate(at), Rational(1, 72));
  EXPECT_EQ(pen.lhs.at(sym::delta(1)).evaluate(at), Rational(1, 24));
}

TEST(Certificate, FamilyPenaltyCoefficient) {
  const auto cert = build_certificate("family-strict-arakelov", 5);
  bool seen = false;
  for (const auto& c : cert.cases) {
    if (!c.penalty) continue;
    const auto pen = normal_form(*c.penalty);
    EXPECT_EQ(pen.lhs.at(sym::delta(1)).evaluate(Point(Rational(5))), Rational(1, 16));
    seen = true;
  }
  EXPECT_TRUE(seen);
}

TEST(HyperellipticExclusion, Threshold) {
  for (long g = 2; g <= 7; ++g) EXPECT_FALSE(hyperelliptic_exclusion(g).excluded) << g;
  for (long g = 8; g <= 40; ++g) EXPECT_TRUE(hyperelliptic_exclusion(g).excluded) << g;
  EXPECT_TRUE(hyperelliptic_exclusion(200).excluded);
}

TEST(HyperellipticExclusion, PlansCoverEveryIrregularity) {
  const auto r = hyperelliptic_exclusion(10);
  std::size_t nc = 0;
  for (const auto& p : r.checks) nc += p.nc_branch ? 1 : 0;
  EXPECT_EQ(nc, case_one_irregularities(10).size());
  EXPECT_EQ(r.checks.size() - nc, case_two_irregularities(10).size());
  for (const auto& p : r.checks) EXPECT_TRUE(p.feasible) << p.q << (p.nc_branch ? " nc" : " c");
}

TEST(HyperellipticExclusion, CertificateMatchesPlans) {
  const auto cert = build_certificate("hyperelliptic-geodesic", 12);
  EXPECT_EQ(cert.cases.size(), hyperelliptic_exclusion(12).checks.size());
  EXPECT_TRUE(verify_certificate(cert));
  try {
    build_certificate("hyperelliptic-geodesic", 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
}
