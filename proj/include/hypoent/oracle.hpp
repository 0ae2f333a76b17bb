#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "hypoent/dist.hpp"

// Numerical ground truth for the closed forms: adaptive quadrature of
// -int f ln f, a resubstitution Monte-Carlo estimator, and a numerical
// evaluation of int_0^inf e^{-ux} ln(1 - e^{-vx}) dx.
namespace hypoent {

/// Thrown when adaptive quadrature exhausts its subdivision budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureConfig {
  double abs_tol = 1e-10;
  int max_subdivisions = 2000;

  void validate() const;
};

struct QuadratureResult {
  double value;
  double abs_error;  // sum of per-interval error estimates
  int intervals;
};

/// Globally adaptive Gauss–Kronrod (7-point Gauss, 15-point Kronrod) on a
/// finite interval. The interval with the largest |K15 - G7| is bisected
/// until the summed estimate is <= abs_tol. The raw difference is used as
/// the error estimate with no QUADPACK-style rescaling, which overestimates
/// the error for smooth integrands.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, int max_subdivisions);

/// Integrand -f(y) ln f(y) with the convention 0 ln 0 = 0.
double neg_f_log_f(double log_f) noexcept;

/// Point past which the tail of -f ln f (and of f) is below `bound`.
double truncation_point(const Exponential& d, double bound);
double truncation_point(const Erlang2& d, double bound);
double truncation_point(const HypoexpTwo& d, double bound);

/// -int_0^inf f ln f, truncated at truncation_point(d, abs_tol / 10) and
/// integrated on [0, U] to the remaining 9/10 of abs_tol.
double entropy_quadrature(const Exponential& d, const QuadratureConfig& cfg = {});
double entropy_quadrature(const Erlang2& d, const QuadratureConfig& cfg = {});
double entropy_quadrature(const HypoexpTwo& d, const QuadratureConfig& cfg = {});

/// int_0^inf f with the same truncation machinery as entropy_quadrature.
double total_probability(const HypoexpTwo& d, const QuadratureConfig& cfg = {});

struct EstimateWithError {
  double estimate;
  double std_error;
  std::int64_t n_samples;
};

/// Resubstitution estimate -(1/n) sum ln f(Y_i) over n draws of d from an
/// Rng seeded with `seed`. std_error is the sample standard deviation of
/// -ln f(Y_i) over sqrt(n). Bit-identical for identical arguments.
EstimateWithError entropy_monte_carlo(const HypoexpTwo& d, std::int64_t n,
                                      std::uint64_t seed);

/// Numerical value of int_0^inf e^{-ux} ln(1 - e^{-vx}) dx.
///
/// Integrated in xi = e^{-vx} as (1/v) int_0^1 xi^{u/v-1} ln(1-xi) dxi on
/// [d0, 1 - d1]; both slivers are dropped after bounding each by abs_tol/10.
double gr_log_integral(double u, double v, const QuadratureConfig& cfg = {});

/// Closed form of the same integral, -(gamma + psi(u/v + 1)) / u.
double gr_log_closed_form(double u, double v);

}  // namespace hypoent
