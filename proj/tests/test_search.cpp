#include "sfcrel/search.hpp"

#include <gtest/gtest.h>

namespace sfcrel {
namespace {

const ReliabilityParams kBaseline{0.999, 0.999, 0.9, 0.9};

ChainSpec chain(int n, int psi = 3, int n_servers = 1) { return ChainSpec{n, psi, n_servers, {}}; }

TEST(MinSigma, SingleSubFlowNeedsThreeBackups) {
  for (Strategy strategy : {Strategy::ASbN, Strategy::ASbS, Strategy::ANbN, Strategy::ANbS}) {
    const int m = strategy == Strategy::ANbN ? 1 : 0;
    const auto r = min_sigma(strategy, kBaseline, chain(1), m, 0.999);
    EXPECT_EQ(r.sigma_min, 3) << to_string(strategy);
    EXPECT_EQ(r.sigma_total, 3) << to_string(strategy);
    EXPECT_NEAR(r.omega.value, 0.25, 1e-12);
    ASSERT_TRUE(r.below_minimum.has_value());
    EXPECT_LT(*r.below_minimum, 0.999);
  }
}

TEST(MinSigma, ParallelSubFlows) {
  const auto asbn = min_sigma(Strategy::ASbN, kBaseline, chain(3), 0, 0.999);
  EXPECT_EQ(asbn.sigma_min, 5);
  EXPECT_NEAR(asbn.omega.value, 0.375, 1e-12);
  const auto asbs = min_sigma(Strategy::ASbS, kBaseline, chain(6), 0, 0.999);
  EXPECT_EQ(asbs.sigma_min, 8);
  EXPECT_NEAR(asbs.omega.value, 6.0 / 14.0, 1e-12);
}

TEST(MinSigma, UnprotectedNeedsNoScan) {
  const auto r = min_sigma(Strategy::CvNone, {1.0, 1.0, 1.0, 1.0}, chain(2), 0, 0.5);
  EXPECT_EQ(r.sigma_min, 0);
  EXPECT_FALSE(r.below_minimum.has_value());
  EXPECT_THROW(min_sigma(Strategy::CvNone, kBaseline, chain(2), 0, 0.999), InfeasibleTarget);
}

TEST(MinSigma, InfeasibleReportsBest) {
  // A shared backup server caps success at phi_r-ish levels.
  try {
    (void)min_sigma(Strategy::ASbS, {0.9, 0.9, 0.9, 0.9}, chain(2), 0, 0.999);
    FAIL() << "expected InfeasibleTarget";
  } catch (const InfeasibleTarget& e) {
    EXPECT_GT(e.best(), 0.0);
    EXPECT_LT(e.best(), 0.999);
  }
}

TEST(MinSigma, RejectsBadInput) {
  EXPECT_THROW(min_sigma(Strategy::ASbN, kBaseline, chain(1), 0, 1.0), std::invalid_argument);
  EXPECT_THROW(min_sigma(Strategy::ASbN, kBaseline, chain(1), 0, 0.0), std::invalid_argument);
  EXPECT_THROW(min_sigma(Strategy::ANbN, kBaseline, chain(1, 3, 2), 3, 0.9), std::invalid_argument);
}

TEST(MinSigma, IsMinimalAndMonotoneInTarget) {
  for (Strategy strategy : {Strategy::ASbN, Strategy::ASbS, Strategy::ANbN, Strategy::ANbS}) {
    for (int n = 1; n <= 6; ++n) {
      int previous = 0;
      for (double target : {0.9, 0.99, 0.995, 0.999}) {
        const int m = strategy == Strategy::ANbN ? 1 : 0;
        try {
          const auto r = min_sigma(strategy, kBaseline, chain(n), m, target);
          EXPECT_GE(r.achieved.value(), target);
          if (r.below_minimum) EXPECT_LT(*r.below_minimum, target);
          EXPECT_GE(r.sigma_min, previous);
          previous = r.sigma_min;
        } catch (const InfeasibleTarget&) {
          previous = 1000;
        }
      }
    }
  }
}

TEST(MaxN, BaselineRows) {
  EXPECT_EQ(max_protected_n(Strategy::ANbN, kBaseline, 3, {4, 2}, 0.999), 15);
  EXPECT_EQ(max_protected_n(Strategy::ANbS, kBaseline, 3, {8, 0}, 0.999), 9);
}

TEST(MaxN, ZeroWhenNothingReaches) {
  EXPECT_EQ(max_protected_n(Strategy::ASbS, {0.9, 0.9, 0.9, 0.9}, 3, {8, 0}, 0.999), 0);
}

TEST(MaxN, NonDecreasingInSigma) {
  for (Strategy strategy : {Strategy::ASbN, Strategy::ASbS, Strategy::ANbN, Strategy::ANbS}) {
    int previous = 0;
    for (int sigma = 0; sigma <= 12; ++sigma) {
      const int n = max_protected_n(strategy, kBaseline, 3, {sigma, 2}, 0.99);
      EXPECT_GE(n, previous) << to_string(strategy) << " sigma=" << sigma;
      previous = n;
    }
  }
}

}  // namespace
}  // namespace sfcrel
