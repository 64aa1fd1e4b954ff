#include "ydilog/ydynamics.hpp"

#include "ydilog/dilog.hpp"
#include "ydilog/qsolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ydilog {

namespace {

constexpr double kLogSpaceLow = 1e-12;
constexpr double kLogSpaceHigh = 1e12;

bool needs_log_space(const Slice& s) {
  return std::any_of(s.begin(), s.end(), [](double v) { return v < kLogSpaceLow || v > kLogSpaceHigh; });
}

Slice step(const RootSystem& rs, std::size_t levels, const Slice& prev, const Slice& cur) {
  const std::size_t n = rs.rank();
  Slice next(cur.size());
  const bool log_space = needs_log_space(prev) || needs_log_space(cur);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < levels; ++m) {
      const std::size_t k = i * levels + m;
      if (log_space) {
        double acc = -std::log(prev[k]);
        for (std::size_t j = 0; j < n; ++j) {
          const int exponent = (i == j ? 2 : 0) - rs.cartan(i, j);
          if (exponent != 0) acc += exponent * std::log1p(cur[j * levels + m]);
        }
        if (m > 0) acc -= std::log1p(1.0 / cur[k - 1]);
        if (m + 1 < levels) acc -= std::log1p(1.0 / cur[k + 1]);
        next[k] = std::exp(acc);
      } else {
        double num = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
          const int exponent = (i == j ? 2 : 0) - rs.cartan(i, j);
          if (exponent != 0) num *= std::pow(1.0 + cur[j * levels + m], exponent);
        }
        double den = prev[k];
        if (m > 0) den *= 1.0 + 1.0 / cur[k - 1];
        if (m + 1 < levels) den *= 1.0 + 1.0 / cur[k + 1];
        next[k] = num / den;
      }
    }
  return next;
}

void check_slice(const Slice& s, std::size_t expected_size, const char* name) {
  if (s.size() != expected_size)
    throw std::invalid_argument(std::string("evolve: ") + name + " has the wrong number of entries");
  for (double v : s)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string("evolve: ") + name + " must be strictly positive and finite");
}

}  // namespace

Trajectory evolve(const RootSystem& rs, int level, const Slice& slice0, const Slice& slice1, int steps) {
  if (!rs.is_simply_laced()) throw std::invalid_argument("evolve: " + rs.label.to_string() + " is not simply laced");
  if (level < 2) throw std::invalid_argument("evolve: level must be at least 2");
  if (steps < 1) throw std::invalid_argument("evolve: steps must be at least 1");
  Trajectory traj(rs, level);
  const std::size_t size = traj.nodes() * traj.levels();
  check_slice(slice0, size, "slice 0");
  check_slice(slice1, size, "slice 1");
  traj.push(slice0);
  traj.push(slice1);
  for (int u = 1; u < steps; ++u) {
    const auto uu = static_cast<std::size_t>(u);
    traj.push(step(rs, traj.levels(), traj.slice(uu - 1), traj.slice(uu)));
  }
  return traj;
}

double check_periodicity(const Trajectory& traj, int shift) {
  if (shift < 1) throw std::invalid_argument("check_periodicity: shift must be positive");
  const auto s = static_cast<std::size_t>(shift);
  if (traj.slice_count() < s + 2)
    throw std::invalid_argument("check_periodicity: trajectory too short for shift " + std::to_string(shift));
  double worst = 0.0;
  for (std::size_t u = 0; u + s < traj.slice_count(); ++u) {
    const Slice& a = traj.slice(u);
    const Slice& b = traj.slice(u + s);
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(b[k] - a[k]) / a[k]);
  }
  return worst;
}

double check_periodicity(const Trajectory& traj) { return check_periodicity(traj, traj.expected_period()); }

double periodic_dilog_sum(const Trajectory& traj) {
  const auto period = static_cast<std::size_t>(traj.expected_period());
  if (traj.slice_count() < period)
    throw std::invalid_argument("periodic_dilog_sum: trajectory shorter than one period");
  std::vector<double> args;
  for (std::size_t u = 0; u < period; ++u)
    for (double v : traj.slice(u)) args.push_back(change_vars(v, Direction::YtoQ));
  return normalized_sum(args);
}

double max_drift(const Trajectory& traj) {
  double worst = 0.0;
  const Slice& base = traj.slice(0);
  for (std::size_t u = 1; u < traj.slice_count(); ++u)
    for (std::size_t k = 0; k < base.size(); ++k)
      worst = std::max(worst, std::abs(traj.slice(u)[k] - base[k]) / base[k]);
  return worst;
}

Slice random_slice(std::size_t nodes, int level, std::mt19937_64& rng) {
  Slice s(nodes * static_cast<std::size_t>(level - 1));
  for (double& v : s) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0,1), platform independent
    v = std::exp(2.0 * unit - 1.0);
  }
  return s;
}

std::vector<TrajectoryRecord> export_records(const Trajectory& traj) {
  std::vector<TrajectoryRecord> out;
  for (std::size_t u = 0; u < traj.slice_count(); ++u)
    for (std::size_t i = 0; i < traj.nodes(); ++i)
      for (std::size_t m = 0; m < traj.levels(); ++m) out.push_back({u, i, m, traj.at(u, i, m)});
  return out;
}

}  // namespace ydilog
