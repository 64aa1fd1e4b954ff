#pragma once

#include "ydilog/rootsys.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ydilog {

/// One spectral-parameter slice Y(u), row-major over (node i, level index m), both 0-based.
using Slice = std::vector<double>;

/// Solution of Y(u+1) Y(u-1) = RHS(Y(u)) for u = 0..U, with Y_0^{-1} = Y_l^{-1} = 0 at the level ends.
class Trajectory {
 public:
  Trajectory(RootSystem rs, int level) : rs_(std::move(rs)), level_(level) {}

  const RootSystem& root_system() const { return rs_; }
  int level() const { return level_; }
  std::size_t nodes() const { return rs_.rank(); }
  std::size_t levels() const { return static_cast<std::size_t>(level_ - 1); }
  std::size_t slice_count() const { return slices_.size(); }

  const Slice& slice(std::size_t u) const { return slices_.at(u); }
  double at(std::size_t u, std::size_t i, std::size_t m) const { return slices_.at(u)[i * levels() + m]; }

  /// 2(h + l).
  int expected_period() const { return 2 * (*rs_.coxeter + level_); }

  void push(Slice s) { slices_.push_back(std::move(s)); }

 private:
  RootSystem rs_;
  int level_;
  std::vector<Slice> slices_;
};

struct TrajectoryRecord {
  std::size_t u, i, m;  // m is 0-based, so m = 0 is Y_1
  double value;
};

/// Builds slices 0..steps from the two initial slices. Throws std::invalid_argument on non-positive
/// entries, non-simply-laced input, wrong slice sizes or steps < 1.
Trajectory evolve(const RootSystem& rs, int level, const Slice& slice0, const Slice& slice1, int steps);

/// Max relative deviation |Y(u+shift) - Y(u)| / Y(u) over all available u. Throws std::invalid_argument
/// when the trajectory has fewer than shift + 2 slices.
double check_periodicity(const Trajectory& traj, int shift);
double check_periodicity(const Trajectory& traj);  // shift = 2(h + l)

/// (6/pi^2) sum_{u=0}^{2(h+l)-1} sum_{i,m} L(Y/(1+Y)); the target value is 2(l-1)nh.
double periodic_dilog_sum(const Trajectory& traj);

/// Max relative change of any entry against slice 0.
double max_drift(const Trajectory& traj);

/// Entries log-uniform in [1/e, e].
Slice random_slice(std::size_t nodes, int level, std::mt19937_64& rng);

std::vector<TrajectoryRecord> export_records(const Trajectory& traj);

}  // namespace ydilog
