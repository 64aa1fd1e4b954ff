#include "ydilog/dilog.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace ydilog {
namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

TEST(RogersDilog, Endpoints) {
  EXPECT_EQ(rogers_dilog(0.0), 0.0);
  EXPECT_EQ(rogers_dilog(1.0), kPi2 / 6.0);
  EXPECT_EQ(dilog_oracle(0.0), 0.0);
  EXPECT_NEAR(dilog_oracle(1.0), kPi2 / 6.0, 1e-12);
}

TEST(RogersDilog, Half) { EXPECT_NEAR(rogers_dilog(0.5), kPi2 / 12.0, 1e-15); }

TEST(RogersDilog, GoldenRatioValues) {
  const double small = (3.0 - std::sqrt(5.0)) / 2.0;
  const double large = (std::sqrt(5.0) - 1.0) / 2.0;
  EXPECT_NEAR(rogers_dilog(small), kPi2 / 15.0, 1e-14);
  EXPECT_NEAR(rogers_dilog(large), kPi2 / 10.0, 1e-14);
  EXPECT_NEAR(dilog_oracle(small), kPi2 / 15.0, 1e-12);
}

TEST(RogersDilog, OracleAgreesAtPointThree) { EXPECT_NEAR(rogers_dilog(0.3), dilog_oracle(0.3), 1e-11); }

TEST(RogersDilog, DomainRejection) {
  EXPECT_THROW(rogers_dilog(-1e-300), std::domain_error);
  EXPECT_THROW(rogers_dilog(1.0000001), std::domain_error);
  EXPECT_THROW(rogers_dilog(std::nan("")), std::domain_error);
  EXPECT_THROW(dilog_oracle(2.0), std::domain_error);
}

TEST(RogersDilog, ReflectionOnRandomPoints) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const double x = unit(rng);
    if (x == 0.0) continue;
    EXPECT_NEAR(rogers_dilog(x) + rogers_dilog(1.0 - x), kPi2 / 6.0, 1e-12) << x;
  }
}

TEST(RogersDilog, MonotoneOnGrid) {
  double prev = rogers_dilog(0.0);
  for (int k = 1; k <= 1000; ++k) {
    const double cur = rogers_dilog(k / 1000.0);
    EXPECT_GE(cur, prev) << k;
    EXPECT_LE(cur, kPi2 / 6.0);
    prev = cur;
  }
}

TEST(RogersDilog, OracleAgreementOnRandomPoints) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const double x = unit(rng);
    EXPECT_NEAR(rogers_dilog(x), dilog_oracle(x), 1e-10) << x;
  }
}

// Abel's five-term relation, independent of the reflection used inside rogers_dilog.
TEST(RogersDilog, FiveTermRelation) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  for (int k = 0; k < 200; ++k) {
    const double x = unit(rng), y = unit(rng);
    const double lhs = rogers_dilog(x) + rogers_dilog(y);
    const double rhs = rogers_dilog(x * y) + rogers_dilog(x * (1 - y) / (1 - x * y)) +
                       rogers_dilog(y * (1 - x) / (1 - x * y));
    EXPECT_NEAR(lhs, rhs, 1e-13);
  }
}

TEST(NormalizedWeightedSum, Examples) {
  const std::vector<double> half{0.5};
  const std::vector<int> one{1};
  EXPECT_NEAR(normalized_weighted_sum(half, one), 0.5, 1e-15);

  const std::vector<double> pair{0.27, 0.73};
  const std::vector<int> ones{1, 1};
  EXPECT_NEAR(normalized_weighted_sum(pair, ones), 1.0, 1e-15);

  const std::vector<double> golden{(3.0 - std::sqrt(5.0)) / 2.0};
  EXPECT_NEAR(normalized_weighted_sum(golden, one), 0.4, 1e-14);

  const std::vector<int> three{3};
  EXPECT_NEAR(normalized_weighted_sum(half, three), 1.5, 1e-15);
  EXPECT_THROW(normalized_weighted_sum(half, ones), std::invalid_argument);
}

}  // namespace
}  // namespace ydilog
