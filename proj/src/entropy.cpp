#include "hypoent/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hypoent/specfun.hpp"

namespace hypoent {

double exp_entropy(double rate) {
  return 1.0 - std::log(checked_rate(rate, "rate"));
}

double erlang2_entropy(double rate) {
  return 1.0 + kEulerGamma - std::log(checked_rate(rate, "rate"));
}

double hypoexp_entropy(const RatePair& rates) {
  if (rates.degenerate()) return erlang2_entropy(rates.common_rate());
  const double hi = rates.hi();
  const double lo = rates.lo();
  const double r = hi / (hi - lo);
  return 1.0 + kEulerGamma - std::log(lo) + digamma_minus_log(r);
}

double mutual_info_aen(double signal_rate, double noise_rate) {
  checked_rate(signal_rate, "signal_rate");
  checked_rate(noise_rate, "noise_rate");
  return hypoexp_entropy(RatePair(noise_rate, signal_rate)) -
         exp_entropy(noise_rate);
}

double mutual_info_aen_direct(double signal_rate, double noise_rate) {
  checked_rate(signal_rate, "signal_rate");
  checked_rate(noise_rate, "noise_rate");
  if (!(noise_rate > signal_rate)) {
    throw std::domain_error(
        "mutual_info_aen_direct requires noise_rate > signal_rate");
  }
  const double gap = noise_rate - signal_rate;
  return kEulerGamma + std::log(gap / signal_rate) + digamma(noise_rate / gap);
}

void LightGatedModel::validate() const {
  checked_rate(lambda_x, "lambda_x");
  checked_rate(lambda_w_on, "lambda_w_on");
  checked_rate(lambda_w_off, "lambda_w_off");
  if (!(p_on >= 0.0 && p_on <= 1.0)) {
    throw std::domain_error("p_on must lie in [0, 1], got " +
                            std::to_string(p_on));
  }
}

ConditionalEntropy cond_entropy_light_branches(const LightGatedModel& model) {
  model.validate();
  ConditionalEntropy out{};
  out.off = hypoexp_entropy(RatePair(model.lambda_x, model.lambda_w_off));
  out.on = hypoexp_entropy(RatePair(model.lambda_x, model.lambda_w_on));
  out.total = (1.0 - model.p_on) * out.off + model.p_on * out.on;
  return out;
}

double cond_entropy_light(const LightGatedModel& model) {
  return cond_entropy_light_branches(model).total;
}

RatePair mean_constrained_rates(double lambda) {
  if (!std::isfinite(lambda) || !(lambda > 1.0)) {
    throw std::domain_error("mean-constrained parameter must exceed 1, got " +
                            std::to_string(lambda));
  }
  return RatePair(lambda, lambda / (lambda - 1.0));
}

}  // namespace hypoent
