#include "ydilog/dilog.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace ydilog {

namespace {

void check_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("Rogers dilogarithm argument outside [0,1]: " + std::to_string(x));
}

// Power series of Li2 for 0 <= x <= 1/2; terms shrink at least like 2^-k / k^2.
double li2_series(double x) {
  double sum = 0.0;
  double power = x;
  for (int k = 1; k < 200; ++k) {
    const double term = power / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-18 * sum) break;
    power *= x;
  }
  return sum;
}

double rogers_lower_half(double x) {
  if (x == 0.0) return 0.0;
  return li2_series(x) + 0.5 * std::log(x) * std::log1p(-x);
}

}  // namespace

double rogers_dilog(double x) {
  check_unit_interval(x);
  if (x == 1.0) return kPiSquaredOverSix;
  if (x <= 0.5) return rogers_lower_half(x);
  return kPiSquaredOverSix - rogers_lower_half(1.0 - x);
}

double dilog_oracle(double x) {
  check_unit_interval(x);
  if (x == 0.0) return 0.0;
  // -1/2 * [log(1-y)/y + log(y)/(1-y)]; both terms have integrable log endpoint singularities.
  auto integrand = [](double y) {
    double first = -1.0;  // limit of log(1-y)/y at y = 0
    if (y > 0.0) first = std::log1p(-y) / y;
    double second = 0.0;
    if (y < 1.0) second = std::log(y) / (1.0 - y);
    else second = -1.0;  // limit at y = 1
    return -0.5 * (first + second);
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(integrand, 0.0, x, 1e-12);
}

double normalized_weighted_sum(std::span<const double> args, std::span<const int> weights) {
  if (args.size() != weights.size())
    throw std::invalid_argument("normalized_weighted_sum: argument and weight counts differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < args.size(); ++i) sum += weights[i] * rogers_dilog(args[i]);
  return sum / kPiSquaredOverSix;
}

double normalized_sum(std::span<const double> args) {
  double sum = 0.0;
  for (double x : args) sum += rogers_dilog(x);
  return sum / kPiSquaredOverSix;
}

}  // namespace ydilog
