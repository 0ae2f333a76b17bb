#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hypoent/oracle.hpp"

namespace hypoent {

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::int64_t samples = 100000;
  QuadratureConfig quadrature{};
  /// Added to every closed-form value before comparison. Only for checking
  /// that the suite notices a wrong closed form; leave at 0 otherwise.
  double closed_form_offset = 0.0;
};

struct CheckResult {
  std::string name;
  double max_deviation;
  double threshold;
  bool passed;
};

/// The oracle agreement suite:
///  - closed form vs quadrature on a 7x7 log grid over [0.1, 10]^2, a != b
///  - normalization of the density on the same grid
///  - the ln(1 - e^{-vx}) integral identity for (u, v) in {0.5, 1, 2, 5}^2
///  - Monte-Carlo z-scores for (2, 1), (10, 0.3), (1.01, 1) over 5 seeds
///    (seed, seed + 1, ..., seed + 4)
std::vector<CheckResult> run_verification(const VerifyOptions& options);

void print_report(std::ostream& out, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

/// 7 log-spaced points on [0.1, 10].
std::vector<double> rate_grid();

}  // namespace hypoent
