#include "ydilog/rational.hpp"

#include <gtest/gtest.h>

#include <random>

namespace ydilog {
namespace {

TEST(Rational, StoredInLowestTermsWithPositiveDenominator) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(2, 3), Rational(-2, 3));
  EXPECT_DOUBLE_EQ(Rational(15, 2).to_double(), 7.5);
}

TEST(RationalMatrix, InverseOfSingularMatrixThrows) {
  RationalMatrix m(2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  EXPECT_THROW(inverse(m), std::domain_error);
}

TEST(RationalMatrix, InverseNeedsPivoting) {
  RationalMatrix m(2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  EXPECT_EQ(inverse(m), m);
}

// Property: M * inverse(M) = I for random nonsingular integer matrices.
TEST(RationalMatrix, InverseIsTwoSidedOnRandomMatrices) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-5, 5);
  int checked = 0;
  while (checked < 50) {
    const std::size_t n = 1 + rng() % 6;
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    RationalMatrix inv;
    try {
      inv = inverse(m);
    } catch (const std::domain_error&) {
      continue;
    }
    EXPECT_EQ(m * inv, RationalMatrix::identity(n));
    EXPECT_EQ(inv * m, RationalMatrix::identity(n));
    ++checked;
  }
}

}  // namespace
}  // namespace ydilog
