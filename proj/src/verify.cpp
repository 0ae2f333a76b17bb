#include "hypoent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "hypoent/entropy.hpp"
#include "hypoent/figures.hpp"

namespace hypoent {
namespace {

constexpr double kClosedVsQuadTol = 1e-8;
constexpr double kNormalizationTol = 1e-10;
constexpr double kIdentityTol = 1e-8;
constexpr double kMonteCarloZ = 5.0;
constexpr int kMonteCarloSeeds = 5;

CheckResult make(std::string name, double deviation, double threshold) {
  return {std::move(name), deviation, threshold, deviation <= threshold};
}

}  // namespace

std::vector<double> rate_grid() { return log_space(0.1, 10.0, 7); }

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.samples < 2) {
    throw std::domain_error("samples must be at least 2");
  }
  options.quadrature.validate();
  const auto grid = rate_grid();
  std::vector<CheckResult> results;

  double closed_dev = 0.0;
  double norm_dev = 0.0;
  for (double a : grid) {
    for (double b : grid) {
      if (a == b) continue;
      const HypoexpTwo d(a, b);
      const double closed = hypoexp_entropy(d.rates()) + options.closed_form_offset;
      closed_dev = std::max(
          closed_dev, std::abs(closed - entropy_quadrature(d, options.quadrature)));
      norm_dev = std::max(
          norm_dev, std::abs(total_probability(d, options.quadrature) - 1.0));
    }
  }
  results.push_back(make("closed form vs quadrature", closed_dev, kClosedVsQuadTol));
  results.push_back(make("density normalization", norm_dev, kNormalizationTol));

  const double uv[] = {0.5, 1.0, 2.0, 5.0};
  double identity_dev = 0.0;
  for (double u : uv) {
    for (double v : uv) {
      identity_dev = std::max(identity_dev,
                              std::abs(gr_log_integral(u, v, options.quadrature) -
                                       gr_log_closed_form(u, v)));
    }
  }
  results.push_back(make("log integral identity", identity_dev, kIdentityTol));

  const std::pair<double, double> pairs[] = {{2.0, 1.0}, {10.0, 0.3}, {1.01, 1.0}};
  double worst_z = 0.0;
  for (const auto& [a, b] : pairs) {
    const HypoexpTwo d(a, b);
    const double closed = hypoexp_entropy(d.rates()) + options.closed_form_offset;
    for (int k = 0; k < kMonteCarloSeeds; ++k) {
      const auto mc = entropy_monte_carlo(d, options.samples,
                                          options.seed + static_cast<std::uint64_t>(k));
      worst_z = std::max(worst_z, std::abs(mc.estimate - closed) / mc.std_error);
    }
  }
  results.push_back(make("monte carlo |z|", worst_z, kMonteCarloZ));
  return results;
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
  char line[160];
  std::snprintf(line, sizeof(line), "%-28s %-24s %-10s %s\n", "check",
                "max deviation", "threshold", "status");
  out << line;
  for (const auto& r : results) {
    std::snprintf(line, sizeof(line), "%-28s %-24.17g %-10.3g %s\n",
                  r.name.c_str(), r.max_deviation, r.threshold,
                  r.passed ? "PASS" : "FAIL");
    out << line;
  }
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace hypoent
