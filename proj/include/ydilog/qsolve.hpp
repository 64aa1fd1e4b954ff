#pragma once

#include "ydilog/rootsys.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace ydilog {

struct SolverConfig {
  double tolerance = 1e-12;               // max log-form residual accepted from a solve
  int newton_max_iterations = 200;
  double damping = 0.5;                   // theta of the log-space fixed-point map
  double fixed_point_tolerance = 1e-13;   // stopping rule on the max log-defect
  int fixed_point_max_iterations = 1'000'000;
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual, int iterations)
      : std::runtime_error(what), residual_(residual), iterations_(iterations) {}
  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

enum class Direction { YtoQ, QtoY };

/// Y/(1+Y) or Q/(1-Q). Throws std::domain_error when the input is out of range.
double change_vars(double value, Direction direction);

struct QSolution {
  std::vector<double> q;
  double residual = 0.0;
  int iterations = 0;
};

struct YSolution {
  std::vector<double> y;
  double residual = 0.0;
  int iterations = 0;
};

/// Positive solution of a level-l constant Y-system. Entry (i, m) holds Y^{(i+1)}_{m+1}.
class YGrid {
 public:
  YGrid() = default;
  YGrid(std::size_t nodes, int level) : nodes_(nodes), level_(level), values_(nodes * levels(), 1.0) {}

  std::size_t nodes() const { return nodes_; }
  int level() const { return level_; }
  std::size_t levels() const { return static_cast<std::size_t>(level_ - 1); }

  double& operator()(std::size_t i, std::size_t m) { return values_[i * levels() + m]; }
  double operator()(std::size_t i, std::size_t m) const { return values_[i * levels() + m]; }
  std::span<const double> values() const { return values_; }

  double residual = 0.0;
  int iterations = 0;

 private:
  std::size_t nodes_ = 0;
  int level_ = 2;
  std::vector<double> values_;
};

/// (1 - Q_i)^{nu_i} = prod_j Q_j^{a'_ij} with 0 < Q_i < 1, by Newton's method in logit coordinates.
QSolution solve_q_system(const RootSystem& rs, Variant variant, const SolverConfig& cfg = {});

/// Y_i^2 = prod_j (1+Y_j)^{2 delta_ij - c_ij}, divided by (1 + 1/Y_i) for AFlat.
YSolution solve_y_form(const RootSystem& rs, Variant variant, const SolverConfig& cfg = {});

/// Level-l constant Y-system for a simply-laced root system.
YGrid solve_constant_y(const RootSystem& rs, int level, const SolverConfig& cfg = {});

/// max_i |nu_i log(1-Q_i) - sum_j a'_ij log Q_j|.
double q_system_residual(const RootSystem& rs, Variant variant, std::span<const double> q);

/// max_i |2 log Y_i - log RHS_i| of the Y-form.
double y_form_residual(const RootSystem& rs, Variant variant, std::span<const double> y);

/// max_{i,m} |2 log Y - log RHS| of the level-l constant Y-system.
double constant_y_residual(const RootSystem& rs, const YGrid& grid);

}  // namespace ydilog
