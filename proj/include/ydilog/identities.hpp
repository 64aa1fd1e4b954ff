#pragma once

#include "ydilog/qsolve.hpp"
#include "ydilog/rational.hpp"
#include "ydilog/rootsys.hpp"

#include <string>

namespace ydilog {

inline constexpr double kDefaultAcceptanceTolerance = 1e-9;

struct VerificationReport {
  std::string instance;  // e.g. "E8/A", "A3/level4", "B2/folding", "B2/flat"
  std::string check;     // "cf", "level", "folding", "flat", ...
  double computed = 0.0;
  Rational expected;
  double deviation = 0.0;
  bool passed = false;
  std::string detail;
};

/// m h* / (h* + l) from the Langlands dual (l = 2 for A, 3 for AFlat); half the A_{2n} value for T_n.
Rational expected_constant(const TypeLabel& label, Variant variant);

/// The closed forms tabulated per family, kept separate from expected_constant as a transcription guard.
Rational tabulated_constant(const TypeLabel& label, Variant variant);

/// (l - 1) n h / (h + l) for a simply-laced type.
Rational level_constant(const TypeLabel& label, int level);

/// (6/pi^2) sum nu_i L(Q_i) against expected_constant.
VerificationReport verify_cf_identity(const TypeLabel& label, Variant variant,
                                      double tol = kDefaultAcceptanceTolerance,
                                      const SolverConfig& cfg = {});

/// (6/pi^2) sum_{i,m} L(Y/(1+Y)) at the level-l constant solution against level_constant.
VerificationReport verify_level_identity(const TypeLabel& label, int level,
                                         double tol = kDefaultAcceptanceTolerance,
                                         const SolverConfig& cfg = {});

/// Level-2 solution of the unfolded simply-laced source: orbit invariance, the collapsed vector solving the
/// target Y-form, orbit sizes against nu (or the exact T_n halving), and the weighted sum.
VerificationReport verify_folding(const TypeLabel& label, double tol = kDefaultAcceptanceTolerance,
                                  const SolverConfig& cfg = {});

/// Level-3 solution with Y_1 = Y_2 solving the AFlat Y-form, and L_AFlat equal to half the level-3 constant.
VerificationReport verify_flat_specialization(const TypeLabel& label, double tol = kDefaultAcceptanceTolerance,
                                              const SolverConfig& cfg = {});

}  // namespace ydilog
