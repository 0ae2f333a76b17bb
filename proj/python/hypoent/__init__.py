"""Differential entropy of the sum of two independent exponential variables."""

from ._core import (
    ConvergenceError,
    EstimateWithError,
    HypoexpTwo,
    RatePair,
    cond_entropy_light,
    digamma,
    digamma_minus_log,
    entropy_monte_carlo,
    entropy_quadrature,
    erlang2_entropy,
    euler_gamma,
    exp_entropy,
    figure_data,
    gr_log_closed_form,
    gr_log_integral,
    hypoexp_entropy,
    mean_constrained_rates,
    mutual_info_aen,
    mutual_info_aen_direct,
    verify,
)

__all__ = [
    "ConvergenceError",
    "EstimateWithError",
    "HypoexpTwo",
    "RatePair",
    "cond_entropy_light",
    "digamma",
    "digamma_minus_log",
    "entropy_monte_carlo",
    "entropy_quadrature",
    "erlang2_entropy",
    "euler_gamma",
    "exp_entropy",
    "figure_data",
    "gr_log_closed_form",
    "gr_log_integral",
    "hypoexp_entropy",
    "mean_constrained_rates",
    "mutual_info_aen",
    "mutual_info_aen_direct",
    "verify",
]
