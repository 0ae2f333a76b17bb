#pragma once

#include "hypoent/dist.hpp"

// Closed-form differential entropies, in nats.
namespace hypoent {

/// h of Exp(rate): 1 - ln(rate).
double exp_entropy(double rate);

/// h of Erlang-2(rate): 2 - psi(2) - ln(rate) = 1 + gamma - ln(rate).
double erlang2_entropy(double rate);

/// Entropy of the sum of independent Exp(hi) and Exp(lo).
///
/// With r = hi / (hi - lo) the closed form
///   1 + gamma + ln((hi - lo) / (hi lo)) + psi(r)
/// is rewritten exactly as
///   1 + gamma - ln(lo) + (psi(r) - ln r),
/// and the bracket is taken from digamma_minus_log. As the rates merge,
/// r grows without bound and the bracket vanishes smoothly, so no large
/// terms cancel. Degenerate pairs return erlang2_entropy(common rate).
double hypoexp_entropy(const RatePair& rates);

/// I(X;Y) for Y = X + W with X ~ Exp(signal_rate), W ~ Exp(noise_rate),
/// computed as h(Y) - h(W). Valid for any ordering of the two rates.
double mutual_info_aen(double signal_rate, double noise_rate);

/// The same mutual information written as
///   gamma + ln((noise - signal) / signal) + psi(noise / (noise - signal)).
/// Only defined for noise_rate > signal_rate; throws std::domain_error
/// otherwise. Kept as a second route for cross-checking mutual_info_aen.
double mutual_info_aen_direct(double signal_rate, double noise_rate);

/// Dwell-time model whose second phase rate is switched by a binary light
/// state L. No ordering among the rates is required.
struct LightGatedModel {
  double lambda_x;
  double lambda_w_on;
  double lambda_w_off;
  double p_on;

  /// Throws std::domain_error on a nonpositive rate or p_on outside [0, 1].
  void validate() const;
};

struct ConditionalEntropy {
  double total;    // h(Y | L)
  double off;      // h(Y | L = off)
  double on;       // h(Y | L = on)
};

ConditionalEntropy cond_entropy_light_branches(const LightGatedModel& model);

/// h(Y | L) = (1 - p_on) h(Y | off) + p_on h(Y | on).
double cond_entropy_light(const LightGatedModel& model);

/// Rates (lambda, lambda / (lambda - 1)) for lambda > 1, which give
/// E[Y] = 1/lambda + (lambda - 1)/lambda = 1.
RatePair mean_constrained_rates(double lambda);

}  // namespace hypoent
