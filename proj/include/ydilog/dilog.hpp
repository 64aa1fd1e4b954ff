#pragma once

#include <numbers>
#include <span>

namespace ydilog {

inline constexpr double kPiSquaredOverSix = std::numbers::pi * std::numbers::pi / 6.0;

/// Rogers dilogarithm L(x) = Li2(x) + log(x) log(1-x) / 2 on [0, 1].
/// Throws std::domain_error outside [0, 1].
double rogers_dilog(double x);

/// L(x) by adaptive tanh-sinh quadrature of its defining integral. Test oracle only.
double dilog_oracle(double x);

/// (6/pi^2) * sum_i weights[i] * L(args[i]).
double normalized_weighted_sum(std::span<const double> args, std::span<const int> weights);

/// (6/pi^2) * sum_i L(args[i]).
double normalized_sum(std::span<const double> args);

}  // namespace ydilog
