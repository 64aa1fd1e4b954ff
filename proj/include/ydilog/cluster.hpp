#pragma once

#include "ydilog/rational.hpp"

#include <istream>
#include <span>
#include <vector>

namespace ydilog {

/// Dense row-major square matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t n) : n_(n), data_(n * n) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_skew_symmetric() const;
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  std::size_t n_ = 0;
  std::vector<Integer> data_;
};

/// Reads rows of whitespace-separated integers, one row per non-blank line.
/// Throws std::invalid_argument unless the rows form a square matrix.
IntegerMatrix parse_integer_matrix(std::istream& in);

/// y-seed with principal tropical data: c(:, j) is the c-vector of y_j.
struct ClusterSeed {
  IntegerMatrix b;
  std::vector<double> y;
  IntegerMatrix c;

  std::size_t rank() const { return y.size(); }

  /// Initial seed with c = identity. Throws std::invalid_argument on a non-skew-symmetric b,
  /// size mismatch, or a non-positive y.
  static ClusterSeed initial(IntegerMatrix b, std::vector<double> y);
};

/// Mutation at node k (0-based):
///   y'_k = 1/y_k,  y'_j = y_j y_k^{[b_kj]+} (1 + y_k)^{-b_kj},
///   b'_ij = -b_ij if k in {i, j}, else b_ij + sgn(b_ik) [b_ik b_kj]+,
///   c'_k = -c_k,   c'_j = c_j + [eps_k b_kj]+ c_k with eps_k the tropical sign of c_k.
/// Throws std::out_of_range for a bad index.
ClusterSeed mutate(const ClusterSeed& seed, std::size_t k);

/// +1 if c(:, k) >= 0, -1 if c(:, k) <= 0. Throws std::logic_error on a zero or sign-incoherent column.
int tropical_sign(const ClusterSeed& seed, std::size_t k);

struct CycleReport {
  bool is_periodic = false;
  std::size_t period = 0;        // number of mutations p
  int n_minus = 0;
  double normalized_sum = 0.0;   // (6/pi^2) sum_t L(y_{k_t}(t) / (1 + y_{k_t}(t)))
  std::vector<int> signs;        // tropical sign at each step, before mutating
  std::vector<std::size_t> permutation;  // final node of initial node i, when periodic
};

/// Applies the 0-based mutation sequence to the initial seed (b0, y0) and tests whether the final seed
/// equals the initial one up to a node permutation (all permutations searched for rank <= 6,
/// identity only above).
CycleReport run_mutation_cycle(const IntegerMatrix& b0, std::span<const std::size_t> sequence,
                               std::span<const double> y0);

}  // namespace ydilog
