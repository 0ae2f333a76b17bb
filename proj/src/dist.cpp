#include "hypoent/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hypoent {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// (1 - e^{-d y}) / d, with the d -> 0 limit y.
double one_minus_exp_over(double d, double y) noexcept {
  if (d == 0.0) return y;
  return -std::expm1(-d * y) / d;
}

}  // namespace

double checked_rate(double rate, const char* name) {
  if (!std::isfinite(rate) || !(rate > 0.0)) {
    throw std::domain_error(std::string(name) +
                            " must be a positive finite rate, got " +
                            std::to_string(rate));
  }
  return rate;
}

RatePair::RatePair(double a, double b)
    : hi_(std::max(checked_rate(a, "rate"), checked_rate(b, "rate"))),
      lo_(std::min(a, b)) {}

bool RatePair::degenerate() const noexcept {
  return hi_ - lo_ <= kDegenerateRelTol * hi_;
}

// Exponential

Exponential::Exponential(double rate) : rate_(checked_rate(rate, "rate")) {}

double Exponential::pdf(double y) const noexcept {
  return y < 0.0 ? 0.0 : rate_ * std::exp(-rate_ * y);
}

double Exponential::log_pdf(double y) const noexcept {
  return y < 0.0 ? kNegInf : std::log(rate_) - rate_ * y;
}

double Exponential::cdf(double y) const noexcept {
  return y <= 0.0 ? 0.0 : -std::expm1(-rate_ * y);
}

// Erlang2

Erlang2::Erlang2(double rate) : rate_(checked_rate(rate, "rate")) {}

double Erlang2::pdf(double y) const noexcept {
  return y < 0.0 ? 0.0 : rate_ * rate_ * y * std::exp(-rate_ * y);
}

double Erlang2::log_pdf(double y) const noexcept {
  if (y <= 0.0) return kNegInf;
  return 2.0 * std::log(rate_) + std::log(y) - rate_ * y;
}

double Erlang2::cdf(double y) const noexcept {
  if (y <= 0.0) return 0.0;
  return 1.0 - std::exp(-rate_ * y) * (1.0 + rate_ * y);
}

double Erlang2::sample(Rng& rng) const noexcept {
  const double w = rng.exponential(rate_);
  return w + rng.exponential(rate_);
}

// HypoexpTwo

HypoexpTwo::HypoexpTwo(RatePair rates) : rates_(rates) {
  if (!rates_.degenerate()) {
    norm_const_ = rates_.hi() * rates_.lo() / (rates_.hi() - rates_.lo());
  }
}

double HypoexpTwo::pdf(double y) const noexcept {
  if (degenerate()) return Erlang2(rates_.common_rate()).pdf(y);
  if (y < 0.0) return 0.0;
  const double hi = rates_.hi();
  const double lo = rates_.lo();
  return hi * lo * std::exp(-lo * y) * one_minus_exp_over(hi - lo, y);
}

double HypoexpTwo::log_pdf(double y) const noexcept {
  if (degenerate()) return Erlang2(rates_.common_rate()).log_pdf(y);
  if (y <= 0.0) return kNegInf;
  const double hi = rates_.hi();
  const double lo = rates_.lo();
  return std::log(hi * lo) - lo * y + std::log(one_minus_exp_over(hi - lo, y));
}

double HypoexpTwo::cdf(double y) const noexcept {
  if (degenerate()) return Erlang2(rates_.common_rate()).cdf(y);
  if (y <= 0.0) return 0.0;
  // Survival e^{-lo y} (1 + lo (1 - e^{-(hi-lo) y}) / (hi - lo)).
  const double hi = rates_.hi();
  const double lo = rates_.lo();
  const double survival =
      std::exp(-lo * y) * (1.0 + lo * one_minus_exp_over(hi - lo, y));
  return 1.0 - survival;
}

double HypoexpTwo::mean() const noexcept {
  return 1.0 / rates_.hi() + 1.0 / rates_.lo();
}

double HypoexpTwo::sample(Rng& rng) const noexcept {
  const double w = rng.exponential(rates_.hi());
  return w + rng.exponential(rates_.lo());
}

}  // namespace hypoent
