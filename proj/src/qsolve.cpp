#include "ydilog/qsolve.hpp"

#include <Eigen/Dense>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace ydilog {

namespace {

double softplus(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

Eigen::MatrixXd to_dense(const RationalMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();
  return out;
}

// Residual F_i = nu_i log(1-Q_i) - sum_j a_ij log Q_j at logit coordinates x.
Eigen::VectorXd q_residual_logit(const Eigen::MatrixXd& gram, const Eigen::VectorXd& nu,
                                 const Eigen::VectorXd& x) {
  Eigen::VectorXd log_q(x.size()), log_1mq(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    log_q(i) = -softplus(-x(i));
    log_1mq(i) = -softplus(x(i));
  }
  return nu.cwiseProduct(log_1mq) - gram * log_q;
}

// Coupled log-space right-hand side shared by the Y-form and the level-l system.
// Layout: z(i, m) = log Y^{(i)}_{m}, nodes x levels.
class LogRhs {
 public:
  LogRhs(const IntMatrix& cartan, std::size_t levels, bool self_denominator)
      : cartan_(cartan), n_(cartan.size()), levels_(levels), self_(self_denominator) {}

  std::size_t size() const { return n_ * levels_; }

  void evaluate(const std::vector<double>& z, std::vector<double>& out) const {
    std::vector<double> log1p_y(z.size()), log1p_inv(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
      log1p_y[k] = softplus(z[k]);
      log1p_inv[k] = softplus(-z[k]);
    }
    out.assign(z.size(), 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t m = 0; m < levels_; ++m) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
          const int exponent = (i == j ? 2 : 0) - cartan_(i, j);
          if (exponent != 0) acc += exponent * log1p_y[j * levels_ + m];
        }
        if (m > 0) acc -= log1p_inv[i * levels_ + m - 1];
        if (m + 1 < levels_) acc -= log1p_inv[i * levels_ + m + 1];
        if (self_) acc -= log1p_inv[i * levels_ + m];
        out[i * levels_ + m] = acc;
      }
  }

  double defect(const std::vector<double>& z) const {
    std::vector<double> rhs;
    evaluate(z, rhs);
    double worst = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) worst = std::max(worst, std::abs(2.0 * z[k] - rhs[k]));
    return worst;
  }

 private:
  const IntMatrix& cartan_;
  std::size_t n_;
  std::size_t levels_;
  bool self_;
};

struct FixedPointResult {
  std::vector<double> z;
  double defect = 0.0;
  int iterations = 0;
};

FixedPointResult damped_fixed_point(const LogRhs& rhs, const SolverConfig& cfg, const std::string& what) {
  FixedPointResult r;
  std::vector<double> z(rhs.size(), 0.0), target;
  const double theta = cfg.damping;
  // Past the tolerance, keep iterating down to the roundoff floor and return the best iterate.
  constexpr int kPolishPatience = 20;
  bool converged = false;
  int since_best = 0;
  r.defect = std::numeric_limits<double>::infinity();
  for (int it = 0; it < cfg.fixed_point_max_iterations; ++it) {
    rhs.evaluate(z, target);
    double defect = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) defect = std::max(defect, std::abs(2.0 * z[k] - target[k]));
    if (defect < r.defect) {
      r.defect = defect;
      r.z = z;
      r.iterations = it;
      since_best = 0;
    } else {
      ++since_best;
    }
    converged = converged || defect <= cfg.fixed_point_tolerance;
    if (converged && (r.defect == 0.0 || since_best >= kPolishPatience)) return r;
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = (1.0 - theta) * z[k] + theta * 0.5 * target[k];
  }
  if (converged) return r;
  throw SolverError(fmt::format("{}: fixed-point iteration cap {} reached with defect {:.3e}", what,
                                cfg.fixed_point_max_iterations, r.defect),
                    r.defect, r.iterations);
}

Eigen::VectorXd nu_vector(const RootSystem& rs) {
  Eigen::VectorXd nu(static_cast<Eigen::Index>(rs.rank()));
  for (std::size_t i = 0; i < rs.rank(); ++i)
    nu(static_cast<Eigen::Index>(i)) = rs.label.family == Family::T ? 1.0 : rs.nu[i];
  return nu;
}

}  // namespace

double change_vars(double value, Direction direction) {
  if (direction == Direction::YtoQ) {
    if (!(value > 0.0)) throw std::domain_error(fmt::format("change_vars: Y must be positive, got {}", value));
    return value / (1.0 + value);
  }
  if (!(value > 0.0 && value < 1.0))
    throw std::domain_error(fmt::format("change_vars: Q must lie in (0,1), got {}", value));
  return value / (1.0 - value);
}

QSolution solve_q_system(const RootSystem& rs, Variant variant, const SolverConfig& cfg) {
  const Eigen::MatrixXd gram = to_dense(weight_gram(rs, variant));
  const Eigen::VectorXd nu = nu_vector(rs);
  const auto n = static_cast<Eigen::Index>(rs.rank());
  const std::string what = "solve_q_system(" + rs.label.to_string() + ", " + variant_name(variant) + ")";

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);  // Q_i = 1/2
  Eigen::VectorXd f = q_residual_logit(gram, nu, x);
  double norm = f.cwiseAbs().maxCoeff();
  int it = 0;
  for (; it < cfg.newton_max_iterations && norm > cfg.tolerance; ++it) {
    Eigen::MatrixXd jac = -gram;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double q = 1.0 / (1.0 + std::exp(-x(j)));
      jac.col(j) *= 1.0 - q;         // d log Q_j / dx_j
      jac(j, j) -= nu(j) * q;        // d log(1-Q_j) / dx_j
    }
    const Eigen::VectorXd step = jac.partialPivLu().solve(-f);
    double t = 1.0;
    bool improved = false;
    while (t > 1e-12) {
      const Eigen::VectorXd trial = x + t * step;
      const Eigen::VectorXd ft = q_residual_logit(gram, nu, trial);
      const double nt = ft.cwiseAbs().maxCoeff();
      if (std::isfinite(nt) && nt < norm) {
        x = trial;
        f = ft;
        norm = nt;
        improved = true;
        break;
      }
      t *= 0.5;
    }
    if (!improved) break;
  }

  QSolution sol;
  sol.iterations = it;
  sol.q.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) sol.q[static_cast<std::size_t>(i)] = 1.0 / (1.0 + std::exp(-x(i)));
  sol.residual = q_system_residual(rs, variant, sol.q);
  if (!(sol.residual <= cfg.tolerance))
    throw SolverError(fmt::format("{}: no convergence after {} Newton steps, residual {:.3e}", what, it,
                                  sol.residual),
                      sol.residual, it);
  return sol;
}

double q_system_residual(const RootSystem& rs, Variant variant, std::span<const double> q) {
  const Eigen::MatrixXd gram = to_dense(weight_gram(rs, variant));
  const Eigen::VectorXd nu = nu_vector(rs);
  const auto n = static_cast<Eigen::Index>(rs.rank());
  if (q.size() != rs.rank()) throw std::invalid_argument("q_system_residual: size mismatch");
  Eigen::VectorXd log_q(n), log_1mq(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    log_q(i) = std::log(q[static_cast<std::size_t>(i)]);
    log_1mq(i) = std::log1p(-q[static_cast<std::size_t>(i)]);
  }
  return (nu.cwiseProduct(log_1mq) - gram * log_q).cwiseAbs().maxCoeff();
}

YSolution solve_y_form(const RootSystem& rs, Variant variant, const SolverConfig& cfg) {
  const LogRhs rhs(rs.cartan, 1, variant == Variant::AFlat);
  const auto r = damped_fixed_point(
      rhs, cfg, "solve_y_form(" + rs.label.to_string() + ", " + variant_name(variant) + ")");
  YSolution sol;
  sol.iterations = r.iterations;
  for (double z : r.z) sol.y.push_back(std::exp(z));
  sol.residual = y_form_residual(rs, variant, sol.y);
  if (!(sol.residual <= cfg.tolerance))
    throw SolverError("solve_y_form: residual above tolerance", sol.residual, r.iterations);
  return sol;
}

double y_form_residual(const RootSystem& rs, Variant variant, std::span<const double> y) {
  if (y.size() != rs.rank()) throw std::invalid_argument("y_form_residual: size mismatch");
  const LogRhs rhs(rs.cartan, 1, variant == Variant::AFlat);
  std::vector<double> z;
  for (double v : y) z.push_back(std::log(v));
  return rhs.defect(z);
}

YGrid solve_constant_y(const RootSystem& rs, int level, const SolverConfig& cfg) {
  if (!rs.is_simply_laced())
    throw std::invalid_argument("solve_constant_y: " + rs.label.to_string() + " is not simply laced");
  if (level < 2) throw std::invalid_argument("solve_constant_y: level must be at least 2");
  YGrid grid(rs.rank(), level);
  const LogRhs rhs(rs.cartan, grid.levels(), false);
  const auto r = damped_fixed_point(
      rhs, cfg, fmt::format("solve_constant_y({}, level {})", rs.label.to_string(), level));
  for (std::size_t i = 0; i < grid.nodes(); ++i)
    for (std::size_t m = 0; m < grid.levels(); ++m) grid(i, m) = std::exp(r.z[i * grid.levels() + m]);
  grid.iterations = r.iterations;
  grid.residual = constant_y_residual(rs, grid);
  if (!(grid.residual <= cfg.tolerance))
    throw SolverError("solve_constant_y: residual above tolerance", grid.residual, r.iterations);
  return grid;
}

double constant_y_residual(const RootSystem& rs, const YGrid& grid) {
  if (grid.nodes() != rs.rank()) throw std::invalid_argument("constant_y_residual: size mismatch");
  const LogRhs rhs(rs.cartan, grid.levels(), false);
  std::vector<double> z;
  for (double v : grid.values()) z.push_back(std::log(v));
  return rhs.defect(z);
}

}  // namespace ydilog
