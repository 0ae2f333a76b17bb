#include "hypoent/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypoent {
namespace {

constexpr double kShiftThreshold = 10.0;

// B_{2n} / (2n) for n = 1..7, so the series reads
// psi(x) ~ ln x - 1/(2x) - sum_n kTail[n-1] / x^{2n}.
constexpr double kTail[] = {
    1.0 / 12.0,      -1.0 / 120.0, 1.0 / 252.0,  -1.0 / 240.0,
    1.0 / 132.0,     -691.0 / 32760.0, 1.0 / 12.0,
};

void check_argument(double x, const char* who) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw std::domain_error(std::string(who) +
                            ": argument must be positive and finite, got " +
                            std::to_string(x));
  }
}

// psi(x) - ln(x) for x >= kShiftThreshold, without the logarithm.
double asymptotic_tail(double x) {
  const double inv2 = 1.0 / (x * x);
  double poly = 0.0;
  for (int i = 6; i >= 0; --i) poly = poly * inv2 + kTail[i];
  return -0.5 / x - inv2 * poly;
}

// Moves x up to the asymptotic regime. Returns the shifted argument and
// accumulates sum 1/(x+k) over the steps taken.
double shift_up(double x, double& correction) {
  correction = 0.0;
  while (x < kShiftThreshold) {
    correction += 1.0 / x;
    x += 1.0;
  }
  return x;
}

}  // namespace

double euler_gamma() noexcept { return kEulerGamma; }

double digamma(double x) {
  check_argument(x, "digamma");
  double correction = 0.0;
  const double shifted = shift_up(x, correction);
  return std::log(shifted) + asymptotic_tail(shifted) - correction;
}

double digamma_minus_log(double x) {
  check_argument(x, "digamma_minus_log");
  if (x >= kShiftThreshold) return asymptotic_tail(x);
  // Below the threshold psi(x) and ln x are O(1) or of opposite sign, so the
  // direct difference keeps full relative accuracy.
  double correction = 0.0;
  const double shifted = shift_up(x, correction);
  return std::log(shifted / x) + asymptotic_tail(shifted) - correction;
}

}  // namespace hypoent
