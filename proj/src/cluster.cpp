#include "ydilog/cluster.hpp"

#include "ydilog/dilog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ydilog {

namespace {

constexpr std::size_t kMaxPermutationSearchRank = 6;
constexpr double kPeriodicRelTol = 1e-10;

Integer positive_part(const Integer& v) { return sgn(v) > 0 ? v : Integer(0); }

bool matches_under(const ClusterSeed& init, const ClusterSeed& fin, const std::vector<std::size_t>& perm) {
  const std::size_t n = init.rank();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t pi = perm[i];
    if (std::abs(fin.y[pi] - init.y[i]) > kPeriodicRelTol * init.y[i]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (fin.b(pi, perm[j]) != init.b(i, j)) return false;
      if (fin.c(j, pi) != init.c(j, i)) return false;
    }
  }
  return true;
}

}  // namespace

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("IntegerMatrix: rows must form a square matrix");
    for (long v : row) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_skew_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

IntegerMatrix parse_integer_matrix(std::istream& in) {
  std::vector<std::vector<Integer>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Integer> row;
    std::string token;
    while (ls >> token) {
      Integer v;
      if (v.set_str(token, 10) != 0) throw std::invalid_argument("matrix: not an integer: '" + token + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix: no rows");
  IntegerMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw std::invalid_argument("matrix: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ClusterSeed ClusterSeed::initial(IntegerMatrix b, std::vector<double> y) {
  if (b.size() != y.size()) throw std::invalid_argument("ClusterSeed: exchange matrix and y sizes differ");
  if (!b.is_skew_symmetric()) throw std::invalid_argument("ClusterSeed: exchange matrix is not skew-symmetric");
  for (double v : y)
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("ClusterSeed: y-variables must be positive");
  const std::size_t n = y.size();
  return ClusterSeed{std::move(b), std::move(y), IntegerMatrix::identity(n)};
}

int tropical_sign(const ClusterSeed& seed, std::size_t k) {
  if (k >= seed.rank()) throw std::out_of_range("tropical_sign: node index out of range");
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < seed.rank(); ++i) {
    const int s = sgn(seed.c(i, k));
    pos = pos || s > 0;
    neg = neg || s < 0;
  }
  if (pos == neg)
    throw std::logic_error("tropical_sign: c-vector " + std::to_string(k) +
                           (pos ? " is not sign-coherent" : " is zero"));
  return pos ? 1 : -1;
}

ClusterSeed mutate(const ClusterSeed& seed, std::size_t k) {
  const std::size_t n = seed.rank();
  if (k >= n) throw std::out_of_range("mutate: node index " + std::to_string(k) + " out of range");
  const int eps = tropical_sign(seed, k);
  ClusterSeed out = seed;

  const double yk = seed.y[k];
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) {
      out.y[j] = 1.0 / yk;
      continue;
    }
    // y_k^{[b]+} (1 + y_k)^{-b} is (y_k / (1 + y_k))^b for b > 0 and (1 + y_k)^{|b|} otherwise.
    const double bkj = seed.b(k, j).get_d();
    if (bkj > 0) out.y[j] = seed.y[j] * std::pow(yk / (1.0 + yk), bkj);
    else if (bkj < 0) out.y[j] = seed.y[j] * std::pow(1.0 + yk, -bkj);
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out.b(i, j) = -seed.b(i, j);
      } else {
        const Integer prod = seed.b(i, k) * seed.b(k, j);
        if (sgn(prod) > 0) out.b(i, j) = seed.b(i, j) + sgn(seed.b(i, k)) * prod;
      }
    }

  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) {
      for (std::size_t i = 0; i < n; ++i) out.c(i, k) = -seed.c(i, k);
      continue;
    }
    const Integer factor = positive_part(eps * seed.b(k, j));
    if (sgn(factor) == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out.c(i, j) = seed.c(i, j) + factor * seed.c(i, k);
  }
  return out;
}

CycleReport run_mutation_cycle(const IntegerMatrix& b0, std::span<const std::size_t> sequence,
                               std::span<const double> y0) {
  if (sequence.empty()) throw std::invalid_argument("run_mutation_cycle: empty mutation sequence");
  const ClusterSeed init = ClusterSeed::initial(b0, std::vector<double>(y0.begin(), y0.end()));
  ClusterSeed seed = init;
  CycleReport report;
  std::vector<double> mutated_q;
  for (std::size_t k : sequence) {
    if (k >= seed.rank()) throw std::out_of_range("run_mutation_cycle: node index out of range");
    const int sign = tropical_sign(seed, k);
    report.signs.push_back(sign);
    if (sign < 0) ++report.n_minus;
    mutated_q.push_back(seed.y[k] / (1.0 + seed.y[k]));
    seed = mutate(seed, k);
  }
  report.period = sequence.size();
  report.normalized_sum = normalized_sum(mutated_q);

  std::vector<std::size_t> perm(init.rank());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (init.rank() <= kMaxPermutationSearchRank) {
    do {
      if (matches_under(init, seed, perm)) {
        report.is_periodic = true;
        report.permutation = perm;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else if (matches_under(init, seed, perm)) {
    report.is_periodic = true;
    report.permutation = perm;
  }
  return report;
}

}  // namespace ydilog
