#include <gtest/gtest.h>

#include "fibred/fibred.hpp"

using namespace fibred;

namespace {

const ClaimVerdict& claim(const ExclusionSummary& s, const std::string& id) {
  for (const auto& c : s.claims)
    if (c.id == id) return c;
  throw std::out_of_range(id);
}

}  // namespace

TEST(Pullback, HyperellipticLocusIsUnramified) {
  const auto h = pullback({3, Rational(2), 2, 2, true}, 0);
  EXPECT_EQ(h.deg_pushforward, Rational(2));
  EXPECT_EQ(h.log_deg, Rational(2));
  EXPECT_EQ(h.rank_A, 2);
  try {
    pullback({3, Rational(2), 2, 2, true}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LambdaOnHyperelliptic);
  }
}

TEST(Pullback, DoubleCover) {
  const auto a = pullback({3, Rational(1), 2, 1, false}, 0);
  EXPECT_EQ(a.deg_pushforward, Rational(2));
  EXPECT_EQ(a.log_deg, Rational(2));
  const auto b = pullback({3, Rational(1), 2, 1, false}, 3);
  EXPECT_EQ(b.deg_pushforward, Rational(2));
  EXPECT_EQ(b.log_deg, Rational(5));
}

TEST(Pullback, MaximalityPreservedWithoutRamification) {
  const CurveData c{6, Rational(9), 6, 3, false};
  EXPECT_EQ(classify_higgs({c.deg_E, c.rank_A, Rational(c.log_deg_C), c.g}), HiggsClass::StrictlyMaximal);
  EXPECT_EQ(classify_higgs(pullback(c, 0)), HiggsClass::StrictlyMaximal);
  EXPECT_EQ(classify_higgs(pullback(c, 2)), HiggsClass::Neither);
}

TEST(Pullback, RejectsImpossibleCurves) {
  EXPECT_THROW(pullback({3, Rational(5), 3, 2, false}, 0), Error);
  EXPECT_THROW(pullback({3, Rational(1), 3, 0, false}, 0), Error);
  EXPECT_THROW(pullback({3, Rational(1), 3, 2, false}, -1), Error);
}

TEST(Transfer, Backward) {
  const auto r = higgs_transfer(HiggsClass::StrictlyMaximal, TransferBranch::NonhyperBackward, 2, 12, 12, Rational(4));
  ASSERT_TRUE(r.deg_B);
  EXPECT_EQ(*r.deg_B, Rational(12));
  EXPECT_FALSE(r.classification);
  const auto s = higgs_transfer(HiggsClass::Maximal, TransferBranch::NonhyperBackward, 0, 5, 3, Rational(6));
  EXPECT_EQ(*s.deg_B, Rational(9));
  EXPECT_EQ(s.classification, HiggsClass::Maximal);
}

TEST(Transfer, BackwardAgreesWithPullback) {
  // deg_B from the transfer equals the pulled-back degree.
  for (int g = 3; g <= 9; ++g)
    for (long L = 1; L <= 4; ++L)
      for (int lam = 0; lam <= 3; ++lam) {
        const CurveData c{g, Rational(g, 2) * Rational(L), g, L, false};
        const auto up = pullback(c, lam);
        const auto r = higgs_transfer(HiggsClass::StrictlyMaximal, TransferBranch::NonhyperBackward, lam, g, g, up.log_deg);
        EXPECT_EQ(*r.deg_B, up.deg_pushforward);
      }
}

TEST(Transfer, InconsistentBranches) {
  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Unsupported;
  };
  EXPECT_EQ(kind([] { higgs_transfer(HiggsClass::Maximal, TransferBranch::Hyperelliptic, 1); }), ErrorKind::InconsistentBranch);
  EXPECT_EQ(kind([] { higgs_transfer(HiggsClass::Maximal, TransferBranch::NonhyperBackward, 4, 5, 3, Rational(4)); }),
            ErrorKind::InconsistentBranch);
  EXPECT_EQ(kind([] { higgs_transfer(HiggsClass::StrictlyMaximal, TransferBranch::NonhyperBackward, 0, 5, 3, Rational(4)); }),
            ErrorKind::InconsistentBranch);
  EXPECT_EQ(higgs_transfer(HiggsClass::Maximal, TransferBranch::Hyperelliptic, 0).classification, HiggsClass::Maximal);
  EXPECT_FALSE(higgs_transfer(HiggsClass::Neither, TransferBranch::NonhyperForward, 2).classification);
}

TEST(ExclusionReport, GenusTwelve) {
  const auto s = oort_exclusion_report(12);
  ASSERT_EQ(s.claims.size(), 4u);
  for (const auto& c : s.claims) {
    EXPECT_TRUE(c.excluded()) << c.id;
    ASSERT_TRUE(c.engine_excluded) << c.id;
    EXPECT_TRUE(*c.engine_excluded) << c.id << ": " << c.engine_basis;
  }
}

TEST(ExclusionReport, GenusThree) {
  const auto s = oort_exclusion_report(3);
  EXPECT_FALSE(claim(s, "typeI-II").excluded());
  EXPECT_FALSE(claim(s, "strictly-maximal").excluded());
  EXPECT_FALSE(claim(s, "hyperelliptic-geodesic").excluded());
  EXPECT_TRUE(claim(s, "nonhyper-strictly-maximal").excluded());
  EXPECT_TRUE(*claim(s, "nonhyper-strictly-maximal").engine_excluded);
  EXPECT_NE(claim(s, "typeI-II").note.find("genus 3"), std::string::npos);
}

TEST(ExclusionReport, GenusFiveAndEleven) {
  const auto five = oort_exclusion_report(5);
  EXPECT_TRUE(claim(five, "strictly-maximal").excluded());
  EXPECT_TRUE(*claim(five, "strictly-maximal").engine_excluded);
  EXPECT_FALSE(claim(five, "typeI-II").excluded());
  const auto eleven = oort_exclusion_report(11);
  EXPECT_FALSE(claim(eleven, "typeI-II").disagrees());
  EXPECT_FALSE(claim(oort_exclusion_report(4), "nonhyper-strictly-maximal").engine_excluded);
}

TEST(ExclusionReport, MonotoneInGenus) {
  std::map<std::string, bool> seen;
  for (int g = 2; g <= 40; ++g) {
    for (const auto& c : oort_exclusion_report(g).claims) {
      if (seen[c.id]) {
        EXPECT_TRUE(c.excluded()) << c.id << " at g = " << g;
      }
      seen[c.id] = seen[c.id] || c.excluded();
      EXPECT_FALSE(c.disagrees()) << c.id << " at g = " << g << ": " << c.engine_basis;
    }
  }
}
