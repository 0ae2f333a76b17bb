#pragma once

#include <optional>

#include "hypoent/random.hpp"

namespace hypoent {

/// Relative rate difference at or below which a two-phase hypoexponential
/// is treated as Erlang-2.
inline constexpr double kDegenerateRelTol = 1e-12;

/// Two positive, finite exponential rates stored as (hi, lo) with hi >= lo.
/// Construction order does not matter.
class RatePair {
 public:
  RatePair(double a, double b);

  double hi() const noexcept { return hi_; }
  double lo() const noexcept { return lo_; }

  /// True when |hi - lo| <= kDegenerateRelTol * hi.
  bool degenerate() const noexcept;

  /// Common rate used when the pair is degenerate.
  double common_rate() const noexcept { return 0.5 * (hi_ + lo_); }

  friend bool operator==(const RatePair&, const RatePair&) = default;

 private:
  double hi_;
  double lo_;
};

/// Throws std::domain_error unless rate is positive and finite.
double checked_rate(double rate, const char* name);

class Exponential {
 public:
  explicit Exponential(double rate);

  double rate() const noexcept { return rate_; }
  double pdf(double y) const noexcept;
  /// ln f(y) for y >= 0; -inf outside the support.
  double log_pdf(double y) const noexcept;
  double cdf(double y) const noexcept;
  double mean() const noexcept { return 1.0 / rate_; }
  double sample(Rng& rng) const noexcept { return rng.exponential(rate_); }

 private:
  double rate_;
};

/// Sum of two iid exponentials with a common rate.
class Erlang2 {
 public:
  explicit Erlang2(double rate);

  double rate() const noexcept { return rate_; }
  double pdf(double y) const noexcept;
  double log_pdf(double y) const noexcept;
  double cdf(double y) const noexcept;
  double mean() const noexcept { return 2.0 / rate_; }
  double sample(Rng& rng) const noexcept;

 private:
  double rate_;
};

/// Distribution of W + X for independent exponentials with rates hi and lo.
///
/// Density c (e^{-lo y} - e^{-hi y}) with c = hi lo / (hi - lo). Internally
/// the density is evaluated as hi lo e^{-lo y} (1 - e^{-(hi-lo) y}) / (hi - lo)
/// using expm1, which stays accurate as the rates approach each other. A
/// degenerate pair (see RatePair::degenerate) switches to Erlang-2 forms at
/// the common rate.
class HypoexpTwo {
 public:
  explicit HypoexpTwo(RatePair rates);
  HypoexpTwo(double a, double b) : HypoexpTwo(RatePair(a, b)) {}

  const RatePair& rates() const noexcept { return rates_; }
  bool degenerate() const noexcept { return !norm_const_.has_value(); }

  /// c = hi lo / (hi - lo); empty for a degenerate pair.
  std::optional<double> norm_const() const noexcept { return norm_const_; }

  double pdf(double y) const noexcept;
  double log_pdf(double y) const noexcept;
  double cdf(double y) const noexcept;
  double mean() const noexcept;

  /// Draws w ~ Exp(hi) then x ~ Exp(lo) and returns w + x.
  double sample(Rng& rng) const noexcept;

 private:
  RatePair rates_;
  std::optional<double> norm_const_;
};

}  // namespace hypoent
