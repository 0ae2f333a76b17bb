// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hypoent/entropy.hpp"
#include "hypoent/figures.hpp"
#include "hypoent/oracle.hpp"
#include "hypoent/specfun.hpp"

using namespace hypoent;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), format, a, b);
  return buffer;
}

const std::vector<double>& grid7() {
  static const auto grid = log_space(0.1, 10.0, 7);
  return grid;
}

Outcome closed_form_vs_quadrature() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double a : grid7()) {
    for (double b : grid7()) {
      if (a == b) continue;
      const HypoexpTwo d(a, b);
      worst = std::max(worst, std::abs(hypoexp_entropy(d.rates()) - entropy_quadrature(d)));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-8 && seconds <= 10.0,
          fmt("max |closed - quad| = %.3e (tol 1e-8), %.2f s (limit 10 s)", worst, seconds)};
}

Outcome analytic_spot_values() {
  const double d21 = std::abs(hypoexp_entropy(RatePair(2.0, 1.0)) - (2.0 - std::log(2.0)));
  const double d31 = std::abs(hypoexp_entropy(RatePair(3.0, 1.0)) - (3.0 - std::log(6.0)));
  const double q21 = std::abs(entropy_quadrature(HypoexpTwo(2.0, 1.0)) - (2.0 - std::log(2.0)));
  const double q31 = std::abs(entropy_quadrature(HypoexpTwo(3.0, 1.0)) - (3.0 - std::log(6.0)));
  return {d21 <= 1e-12 && d31 <= 1e-12 && q21 <= 1e-10 && q31 <= 1e-10,
          fmt("|h(2,1) - (2 - ln 2)| = %.3e, |h(3,1) - (3 - ln 6)| = %.3e (tol 1e-12)", d21, d31) +
              fmt("; quadrature confirms to %.3e, %.3e", q21, q31)};
}

Outcome erlang_limit() {
  double worst_ratio = 0.0;
  bool finite = true;
  for (double lambda : {0.5, 1.0, 3.0}) {
    for (double eps : {1e-2, 1e-4, 1e-6, 1e-8, 1e-9, 1e-10}) {
      const double h = hypoexp_entropy(RatePair(lambda * (1.0 + eps), lambda));
      finite = finite && std::isfinite(h);
      worst_ratio = std::max(worst_ratio, std::abs(h - erlang2_entropy(lambda)) / eps);
    }
  }
  return {finite && worst_ratio <= 2.0,
          fmt("max |h - h_erlang| / eps = %.3f (limit 2), all finite: ", worst_ratio) +
              (finite ? "yes" : "no")};
}

Outcome figure2() {
  const auto rows = mean_constrained_rows(200);
  double max_value = -1e300;
  double at_two = std::nan("");
  double at_low = std::nan("");
  double at_high = std::nan("");
  for (const auto& row : rows) {
    max_value = std::max(max_value, row.entropy_nats);
    if (row.lambda == 2.0) at_two = row.entropy_nats;
    if (row.lambda == 1.01) at_low = row.entropy_nats;
    if (row.lambda == 100.0) at_high = row.entropy_nats;
  }
  const double erlang_dev = std::abs(at_two - (1.0 + kEulerGamma - std::log(2.0)));
  const bool ok = max_value < 1.0 && erlang_dev <= 1e-12 && at_low > 0.93 && at_high > 0.93;
  return {ok, fmt("max value %.6f (< 1), |h(lambda=2) - (1 + gamma - ln 2)| = %.3e", max_value,
                  erlang_dev) +
                  fmt(", h(1.01) = %.6f, h(100) = %.6f (> 0.93)", at_low, at_high)};
}

Outcome mutual_information() {
  const auto grid = log_space(0.1, 10.0, 9);
  double worst = 0.0;
  double min_mi = 1e300;
  for (double x : grid) {
    for (double w : grid) {
      min_mi = std::min(min_mi, mutual_info_aen(x, w));
      if (w > x) {
        worst = std::max(worst, std::abs(mutual_info_aen_direct(x, w) -
                                         (hypoexp_entropy(RatePair(w, x)) - exp_entropy(w))));
      }
    }
  }
  const double unit = std::abs(mutual_info_aen(1.0, 2.0) - 1.0);
  return {worst <= 1e-12 && unit <= 1e-12 && min_mi > 0.0,
          fmt("max |direct - difference| = %.3e, |mi(1,2) - 1| = %.3e (tol 1e-12)", worst, unit) +
              fmt(", min mi = %.4f (> 0)", min_mi)};
}

Outcome conditional_entropy() {
  const LightGatedModel model{1.0, 2.0, 0.5, 0.5};
  const double expected = 2.0 - std::log(2.0) / 2.0;
  const double closed = cond_entropy_light(model);
  const double quad = 0.5 * entropy_quadrature(HypoexpTwo(1.0, 0.5)) +
                      0.5 * entropy_quadrature(HypoexpTwo(1.0, 2.0));
  const double d_closed = std::abs(closed - expected);
  const double d_quad = std::abs(closed - quad);
  return {d_closed <= 1e-10 && d_quad <= 1e-10,
          fmt("|h(Y|L) - (2 - ln2/2)| = %.3e, |h(Y|L) - branch quadrature| = %.3e (tol 1e-10)",
              d_closed, d_quad)};
}

Outcome derivation_identity() {
  double worst = 0.0;
  int pairs = 0;
  for (double u : {0.5, 1.0, 2.0, 5.0}) {
    for (double v : {0.5, 1.0, 2.0, 5.0}) {
      worst = std::max(worst, std::abs(gr_log_integral(u, v) +
                                       (kEulerGamma + digamma(u / v + 1.0)) / u));
      ++pairs;
    }
  }
  const double unit = std::abs(gr_log_integral(1.0, 1.0) + 1.0);
  return {pairs == 16 && worst <= 1e-8 && unit <= 1e-10,
          fmt("16 pairs, max deviation %.3e (tol 1e-8); |I(1,1) + 1| = %.3e (tol 1e-10)", worst,
              unit)};
}

Outcome monte_carlo() {
  const auto start = std::chrono::steady_clock::now();
  const std::pair<double, double> rate_pairs[] = {{2.0, 1.0}, {10.0, 0.3}, {1.01, 1.0}};
  double worst_z = 0.0;
  for (const auto& [a, b] : rate_pairs) {
    const HypoexpTwo d(a, b);
    const double closed = hypoexp_entropy(d.rates());
    for (std::uint64_t seed : {11u, 22u, 33u, 44u, 55u}) {
      const auto mc = entropy_monte_carlo(d, 100000, seed);
      worst_z = std::max(worst_z, std::abs(mc.estimate - closed) / mc.std_error);
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst_z <= 5.0 && seconds <= 30.0,
          fmt("max |estimate - closed| / std_error = %.3f (limit 5), %.2f s (limit 30 s)", worst_z,
              seconds)};
}

Outcome special_functions() {
  double worst_int = 0.0;
  double harmonic = 0.0;
  for (int n = 1; n <= 20; ++n) {
    worst_int = std::max(worst_int, std::abs(digamma(n) - (-kEulerGamma + harmonic)));
    harmonic += 1.0 / n;
  }
  double worst_rec = 0.0;
  const auto grid = log_space(1e-3, 1e6, 1000);
  for (double x : grid) {
    worst_rec = std::max(worst_rec, std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x));
  }
  return {worst_int <= 1e-12 && worst_rec <= 1e-11,
          fmt("integer args max deviation %.3e (tol 1e-12), recurrence residual %.3e (tol 1e-11)",
              worst_int, worst_rec)};
}

Outcome determinism() {
  bool same = true;
  for (auto figure : {Figure::kRateFamilies, Figure::kMeanConstrained}) {
    for (auto format : {DataFormat::kCsv, DataFormat::kJson}) {
      std::ostringstream first;
      std::ostringstream second;
      write_figure(first, figure, 200, format);
      write_figure(second, figure, 200, format);
      same = same && first.str() == second.str();
    }
  }
  const HypoexpTwo d(2.0, 1.0);
  const auto a = entropy_monte_carlo(d, 100000, 42);
  const auto b = entropy_monte_carlo(d, 100000, 42);
  const bool mc_same = a.estimate == b.estimate && a.std_error == b.std_error &&
                       a.n_samples == b.n_samples;
  return {same && mc_same, std::string("figure data identical: ") + (same ? "yes" : "no") +
                               ", monte carlo identical: " + (mc_same ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1  closed form vs quadrature", closed_form_vs_quadrature},
      {"AC2  analytic spot values", analytic_spot_values},
      {"AC3  Erlang-2 limit", erlang_limit},
      {"AC4  mean-constrained curve", figure2},
      {"AC5  mutual information", mutual_information},
      {"AC6  conditional entropy", conditional_entropy},
      {"AC7  log integral identity", derivation_identity},
      {"AC8  Monte-Carlo oracle", monte_carlo},
      {"AC9  special functions", special_functions},
      {"AC10 determinism", determinism},
  };
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome{false, ""};
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.passed) ++failures;
    std::printf("[%s] %s: %s\n", outcome.passed ? "PASS" : "FAIL", name, outcome.detail.c_str());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2f s\n",
              static_cast<int>(criteria.size()) - failures, criteria.size(), seconds);
  return failures == 0 ? 0 : 1;
}
