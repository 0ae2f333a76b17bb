#pragma once

namespace hypoent {

/// Euler–Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

double euler_gamma() noexcept;

/// Digamma function psi(x) = d/dx ln Gamma(x) for x > 0.
///
/// The argument is shifted upward with psi(x) = psi(x+1) - 1/x until it
/// reaches 10, then the Stirling-type asymptotic series is summed through
/// the x^-14 term. Absolute error is below 1e-12 on [1e-3, 1e12].
///
/// Throws std::domain_error for x <= 0, NaN or infinity.
double digamma(double x);

/// psi(x) - ln(x), evaluated without subtracting two large numbers.
///
/// Once the shifted argument is in the asymptotic regime the logarithm is
/// removed analytically, so only the small tail -1/(2x) - 1/(12x^2) + ...
/// is summed. The result is negative for all x > 0 and tends to 0 from
/// below.
double digamma_minus_log(double x);

}  // namespace hypoent
