#include "ydilog/cluster.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

namespace ydilog {
namespace {

using Vec = std::vector<long long>;

// Independent tropical model: y_j is the monomial u^{t_j} in the min-plus semifield, where
// 1 (+) u^t = u^{min(0, t)} componentwise. Exchange matrix mutated by the textbook matrix rule.
struct TropicalSeed {
  std::vector<Vec> b;  // rows
  std::vector<Vec> t;  // t[j] = exponent vector of y_j

  void mutate(std::size_t k) {
    const std::size_t n = b.size();
    std::vector<Vec> nt = t;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) {
        for (auto& e : nt[j]) e = -e;
        continue;
      }
      for (std::size_t r = 0; r < n; ++r)
        nt[j][r] = t[j][r] + std::max(b[k][j], 0LL) * t[k][r] - b[k][j] * std::min(0LL, t[k][r]);
    }
    std::vector<Vec> nb = b;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == k || j == k) nb[i][j] = -b[i][j];
        else nb[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
      }
    b = nb;
    t = nt;
  }

  int sign(std::size_t k) const {
    for (long long e : t[k])
      if (e != 0) return e > 0 ? 1 : -1;
    return 0;
  }
};

IntegerMatrix random_skew(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntegerMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int v = entry(rng);
      b(i, j) = v;
      b(j, i) = -v;
    }
  return b;
}

std::vector<double> random_y(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> expo(-1.0, 1.0);
  std::vector<double> y(n);
  for (auto& v : y) v = std::exp(expo(rng));
  return y;
}

TEST(ClusterSeed, InitialValidation) {
  EXPECT_THROW(ClusterSeed::initial(IntegerMatrix{{0, 1}, {1, 0}}, {1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(ClusterSeed::initial(IntegerMatrix{{1}}, {1.0}), std::invalid_argument);
  EXPECT_THROW(ClusterSeed::initial(IntegerMatrix{{0}}, {0.0}), std::invalid_argument);
  EXPECT_THROW(ClusterSeed::initial(IntegerMatrix{{0}}, {1.0, 2.0}), std::invalid_argument);
  const auto s = ClusterSeed::initial(IntegerMatrix{{0, 2}, {-2, 0}}, {1.0, 2.0});
  EXPECT_EQ(s.c, IntegerMatrix::identity(2));
}

TEST(Mutate, RankOne) {
  const auto s = ClusterSeed::initial(IntegerMatrix{{0}}, {3.0});
  const auto m = mutate(s, 0);
  EXPECT_DOUBLE_EQ(m.y[0], 1.0 / 3.0);
  EXPECT_EQ(m.c(0, 0), -1);
  EXPECT_EQ(tropical_sign(s, 0), 1);
  EXPECT_EQ(tropical_sign(m, 0), -1);
  EXPECT_THROW(mutate(s, 1), std::out_of_range);
}

TEST(Mutate, A2AgainstHandDerivedExchange) {
  const double y1 = 0.8, y2 = 2.5;
  const auto s = ClusterSeed::initial(IntegerMatrix{{0, 1}, {-1, 0}}, {y1, y2});
  const auto m = mutate(s, 0);
  EXPECT_DOUBLE_EQ(m.y[0], 1 / y1);
  EXPECT_DOUBLE_EQ(m.y[1], y2 * y1 / (1 + y1));
  EXPECT_EQ(m.b, (IntegerMatrix{{0, -1}, {1, 0}}));
  // Mutating node 2 first: b_21 = -1, so y'_1 = y_1 (1 + y_2).
  const auto m2 = mutate(s, 1);
  EXPECT_DOUBLE_EQ(m2.y[0], y1 * (1 + y2));
  EXPECT_DOUBLE_EQ(m2.y[1], 1 / y2);
}

TEST(TropicalSign, InitialSeedIsPositive) {
  const auto s = ClusterSeed::initial(IntegerMatrix{{0, 1, -2}, {-1, 0, 3}, {2, -3, 0}}, {1, 2, 3});
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(tropical_sign(s, k), 1);
}

TEST(TropicalSign, IncoherentColumnIsHardFailure) {
  auto s = ClusterSeed::initial(IntegerMatrix{{0, 1}, {-1, 0}}, {1, 1});
  s.c(0, 0) = 1;
  s.c(1, 0) = -1;
  EXPECT_THROW(tropical_sign(s, 0), std::logic_error);
  s.c(0, 1) = 0;
  s.c(1, 1) = 0;
  EXPECT_THROW(tropical_sign(s, 1), std::logic_error);
}

TEST(Mutate, InvolutionOnRandomSeeds) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto seed = ClusterSeed::initial(random_skew(rng, n, 3), random_y(rng, n));
    const std::size_t k = rng() % n;
    const auto back = mutate(mutate(seed, k), k);
    ASSERT_EQ(back.b, seed.b);
    ASSERT_EQ(back.c, seed.c);
    for (std::size_t j = 0; j < n; ++j) ASSERT_NEAR(back.y[j], seed.y[j], 1e-12 * seed.y[j]);

    // Away from the initial seed c is no longer the identity.
    auto moved = seed;
    for (int pre = 0; pre < 3; ++pre) moved = mutate(moved, rng() % n);
    const std::size_t k2 = rng() % n;
    const auto back2 = mutate(mutate(moved, k2), k2);
    ASSERT_EQ(back2.b, moved.b);
    ASSERT_EQ(back2.c, moved.c);
    for (std::size_t j = 0; j < n; ++j)
      if (std::isnormal(moved.y[j]) && std::isnormal(moved.y[k2]) && moved.y[k2] < 1e100 && moved.y[k2] > 1e-100)
        ASSERT_NEAR(back2.y[j], moved.y[j], 1e-9 * moved.y[j]);
  }
}

TEST(Mutate, SignCoherenceAlongRandomSequences) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    auto seed = ClusterSeed::initial(random_skew(rng, n, 3), random_y(rng, n));
    const int length = 1 + static_cast<int>(rng() % 20);
    for (int step = 0; step < length; ++step) {
      seed = mutate(seed, rng() % n);
      ASSERT_TRUE(seed.b.is_skew_symmetric());
      for (std::size_t k = 0; k < n; ++k) ASSERT_NO_THROW(tropical_sign(seed, k));
    }
  }
}

TEST(Mutate, CVectorsMatchTropicalModel) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto b0 = random_skew(rng, n, 2);
    auto seed = ClusterSeed::initial(b0, random_y(rng, n));
    TropicalSeed model;
    model.b.assign(n, Vec(n));
    model.t.assign(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      model.t[i][i] = 1;
      for (std::size_t j = 0; j < n; ++j) model.b[i][j] = b0(i, j).get_si();
    }
    for (int step = 0; step < 8; ++step) {
      const std::size_t k = rng() % n;
      ASSERT_EQ(tropical_sign(seed, k), model.sign(k));
      seed = mutate(seed, k);
      model.mutate(k);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r) {
          ASSERT_EQ(seed.c(r, j).get_si(), model.t[j][r]);
          ASSERT_EQ(seed.b(r, j).get_si(), model.b[r][j]);
        }
    }
  }
}

TEST(Cycle, RankOneTwoSteps) {
  const std::vector<std::size_t> seq{0, 0};
  for (double t : {0.01, 0.5, 1.0, 7.0, 300.0}) {
    const std::vector<double> y0{t};
    const auto r = run_mutation_cycle(IntegerMatrix{{0}}, seq, y0);
    EXPECT_TRUE(r.is_periodic);
    EXPECT_EQ(r.period, 2u);
    EXPECT_EQ(r.signs, (std::vector<int>{1, -1}));
    EXPECT_EQ(r.n_minus, 1);
    EXPECT_NEAR(r.normalized_sum, 1.0, 1e-12);
  }
}

TEST(Cycle, PentagonMatchesTropicalModelAndIsY0Invariant) {
  const IntegerMatrix b{{0, 1}, {-1, 0}};
  const std::vector<std::size_t> seq{0, 1, 0, 1, 0};

  TropicalSeed model{{{0, 1}, {-1, 0}}, {{1, 0}, {0, 1}}};
  std::vector<int> expected_signs;
  for (std::size_t k : seq) {
    expected_signs.push_back(model.sign(k));
    model.mutate(k);
  }
  const int expected_minus =
      static_cast<int>(std::count(expected_signs.begin(), expected_signs.end(), -1));

  std::mt19937_64 rng(24);
  double first_sum = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto y0 = random_y(rng, 2);
    const auto r = run_mutation_cycle(b, seq, y0);
    ASSERT_TRUE(r.is_periodic);
    EXPECT_EQ(r.period, 5u);
    EXPECT_EQ(r.signs, expected_signs);
    EXPECT_EQ(r.n_minus, expected_minus);
    EXPECT_EQ(r.permutation, (std::vector<std::size_t>{1, 0}));
    EXPECT_NEAR(r.normalized_sum, r.n_minus, 1e-10);
    if (trial == 0) first_sum = r.normalized_sum;
    EXPECT_NEAR(r.normalized_sum, first_sum, 1e-10);
  }
}

TEST(Cycle, DecoupledA1xA1) {
  const std::vector<std::size_t> seq{0, 1, 0, 1};
  const std::vector<double> y0{0.3, 4.0};
  const auto r = run_mutation_cycle(IntegerMatrix{{0, 0}, {0, 0}}, seq, y0);
  EXPECT_TRUE(r.is_periodic);
  EXPECT_EQ(r.period, 4u);
  EXPECT_EQ(r.n_minus, 2);
  EXPECT_NEAR(r.normalized_sum, 2.0, 1e-12);
}

TEST(Cycle, NonPeriodicSequence) {
  const std::vector<std::size_t> seq{0, 1, 0};
  const std::vector<double> y0{0.3, 4.0};
  const auto r = run_mutation_cycle(IntegerMatrix{{0, 1}, {-1, 0}}, seq, y0);
  EXPECT_FALSE(r.is_periodic);
  EXPECT_THROW(run_mutation_cycle(IntegerMatrix{{0}}, std::vector<std::size_t>{}, std::vector<double>{1.0}),
               std::invalid_argument);
  EXPECT_THROW(run_mutation_cycle(IntegerMatrix{{0}}, std::vector<std::size_t>{1}, std::vector<double>{1.0}),
               std::out_of_range);
}

// A_3 alternating (bipartite) sequence closes after h + 2 = 6 sink-source steps.
TEST(Cycle, A3BipartiteCycleIsPeriodic) {
  const IntegerMatrix b{{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}};
  std::vector<std::size_t> seq;
  for (int round = 0; round < 3; ++round) {
    seq.push_back(0);
    seq.push_back(2);
    seq.push_back(1);
  }
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = run_mutation_cycle(b, seq, random_y(rng, 3));
    ASSERT_TRUE(r.is_periodic);
    EXPECT_EQ(r.period, seq.size());
    EXPECT_GE(r.n_minus, 0);
    EXPECT_LE(r.n_minus, static_cast<int>(r.period));
    EXPECT_NEAR(r.normalized_sum, r.n_minus, 1e-10);
  }
}

TEST(ParseIntegerMatrix, ReadsRows) {
  std::istringstream in("0 1 -2\n-1 0 3\n\n2 -3 0\n");
  const auto m = parse_integer_matrix(in);
  EXPECT_EQ(m, (IntegerMatrix{{0, 1, -2}, {-1, 0, 3}, {2, -3, 0}}));
  EXPECT_TRUE(m.is_skew_symmetric());
}

TEST(ParseIntegerMatrix, Errors) {
  std::istringstream ragged("0 1\n-1\n");
  EXPECT_THROW(parse_integer_matrix(ragged), std::invalid_argument);
  std::istringstream junk("0 x\n1 0\n");
  EXPECT_THROW(parse_integer_matrix(junk), std::invalid_argument);
  std::istringstream empty("\n");
  EXPECT_THROW(parse_integer_matrix(empty), std::invalid_argument);
}

}  // namespace
}  // namespace ydilog
