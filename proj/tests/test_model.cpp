#include "sfcrel/model.hpp"

#include <limits>
#include <random>

#include <gtest/gtest.h>

namespace sfcrel {
namespace {

Scenario baseline(Strategy strategy, int n, int sigma, int m = 0) {
  return Scenario{strategy, {0.999, 0.999, 0.9, 0.9}, {n, 3, 1, {}}, {sigma, m}};
}

bool mentions(const ValidationResult& r, const std::string& text) {
  for (const auto& v : r.violations) {
    if (v.find(text) != std::string::npos) return true;
  }
  return false;
}

TEST(Validate, BaselineScenarioIsValid) { EXPECT_TRUE(validate(baseline(Strategy::ASbS, 6, 8)).ok()); }

TEST(Validate, MMustBeMultipleOfN) {
  Scenario s{Strategy::ANbN, {}, {4, 4, 2, {}}, {1, 3}};
  const auto r = validate(s);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(mentions(r, "m must be a multiple of N"));
  s.backup.m = 4;
  EXPECT_TRUE(validate(s).ok());
}

TEST(Validate, ProbabilityRange) {
  Scenario s{Strategy::CvNone, {1.2, 1.0, 1.0, 1.0}, {1, 1, 1, {}}, {}};
  EXPECT_TRUE(mentions(validate(s), "phi out of [0,1]"));
  s.params = {1.0, 1.0, -0.1, std::numeric_limits<double>::quiet_NaN()};
  const auto r = validate(s);
  EXPECT_TRUE(mentions(r, "upsilon out of [0,1]"));
  EXPECT_TRUE(mentions(r, "upsilon_r out of [0,1]"));
}

TEST(Validate, ReportsEveryViolation) {
  Scenario s{Strategy::DvNone, {2.0, 1.0, 1.0, 1.0}, {0, 3, 2, {1, 1}}, {}};
  const auto r = validate(s);
  EXPECT_TRUE(mentions(r, "phi out of"));
  EXPECT_TRUE(mentions(r, "n must be >= 1"));
  EXPECT_TRUE(mentions(r, "psi_split must sum to psi_total"));
  EXPECT_NE(r.message().find("; "), std::string::npos);
}

TEST(Validate, PsiSplitShape) {
  Scenario s{Strategy::ANbS, {}, {2, 4, 2, {4}}, {1, 0}};
  EXPECT_TRUE(mentions(validate(s), "psi_split length must equal N"));
  s.chain.psi_split = {4, 0};
  EXPECT_TRUE(mentions(validate(s), "every psi_split entry must be >= 1"));
  s.chain.psi_split = {3, 1};
  EXPECT_TRUE(validate(s).ok());
  s.chain.n_servers = 5;
  s.chain.psi_split.clear();
  EXPECT_TRUE(mentions(validate(s), "N must not exceed psi_total"));
}

TEST(Validate, Caps) {
  Scenario s{Strategy::VnfOnly, {}, {65, 1, 1, {}}, {}};
  EXPECT_TRUE(mentions(validate(s), "n exceeds cap"));
  s.chain.n = 40;
  s.backup.sigma = 30;
  EXPECT_TRUE(mentions(validate(s), "n + sigma exceeds cap"));
  Scenario anbn{Strategy::ANbN, {}, {1, 1, 1, {}}, {33, 2}};
  EXPECT_TRUE(mentions(validate(anbn), "(m/N)*sigma exceeds cap"));
}

TEST(Validate, NeverThrowsOnGarbage) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> any_int(-5, 80);
  std::uniform_real_distribution<double> any_real(-0.5, 1.5);
  for (int i = 0; i < 5000; ++i) {
    Scenario s;
    s.strategy = all_strategies()[static_cast<std::size_t>(i) % all_strategies().size()];
    s.params = {any_real(rng), any_real(rng), any_real(rng), any_real(rng)};
    s.chain = {any_int(rng), any_int(rng), any_int(rng), {}};
    if (i % 3 == 0) s.chain.psi_split = {any_int(rng), any_int(rng)};
    s.backup = {any_int(rng), any_int(rng)};
    EXPECT_NO_THROW((void)validate(s));
  }
}

TEST(Model, EvenSplitFavoursLowIndices) {
  EXPECT_EQ(even_split(7, 3), (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(even_split(3, 3), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(even_split(4, 1), (std::vector<int>{4}));
}

TEST(Model, ConcentratedPlacementForcesOneTypePerServer) {
  const Scenario s = normalized(Scenario{Strategy::ASbN, {}, {2, 4, 1, {4}}, {1, 9}});
  EXPECT_EQ(s.chain.n_servers, 4);
  EXPECT_EQ(s.chain.psi_split, (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(s.backup.m, 0);
  const Scenario d = normalized(Scenario{Strategy::DvNone, {}, {2, 5, 2, {}}, {3, 0}});
  EXPECT_EQ(d.chain.psi_split, (std::vector<int>{3, 2}));
  EXPECT_EQ(d.backup.sigma, 0);
}

TEST(TotalBackup, Examples) {
  EXPECT_EQ(total_backup_subchains(Scenario{Strategy::ANbN, {}, {15, 3, 1, {}}, {4, 2}}), 8);
  EXPECT_EQ(total_backup_subchains(Scenario{Strategy::ASbS, {}, {1, 3, 1, {}}, {3, 0}}), 3);
  EXPECT_EQ(total_backup_subchains(Scenario{Strategy::ASbN, {}, {1, 3, 1, {}}, {0, 0}}), 0);
}

TEST(TotalBackup, Properties) {
  for (Strategy strategy : all_strategies()) {
    for (int n_servers = 1; n_servers <= 3; ++n_servers) {
      for (int per_position = 0; per_position <= 3; ++per_position) {
        Scenario s{strategy, {}, {2, 3, n_servers, {}}, {0, per_position * n_servers}};
        EXPECT_EQ(total_backup_subchains(s), 0);
        for (int sigma = 1; sigma <= 5; ++sigma) {
          s.backup.sigma = sigma;
          if (strategy == Strategy::ANbN) EXPECT_EQ(total_backup_subchains(s) % sigma, 0);
        }
      }
    }
  }
}

TEST(Strategy, NamesRoundTrip) {
  for (Strategy s : all_strategies()) EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_FALSE(parse_strategy("aSbN").has_value());
}

}  // namespace
}  // namespace sfcrel
