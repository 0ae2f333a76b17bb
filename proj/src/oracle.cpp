#include "hypoent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hypoent/specfun.hpp"

namespace hypoent {
namespace {

// Kronrod abscissae on [0, 1); odd indices are the 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a,
                    double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

constexpr double kTruncationGrowth = 1.25;

template <class Bound>
double grow_until(double start, double target, Bound bound) {
  double u = start;
  for (int i = 0; i < 2000 && !(bound(u) < target); ++i) u *= kTruncationGrowth;
  if (!(bound(u) < target)) {
    throw ConvergenceError("could not find a truncation point for the tail");
  }
  return u;
}

template <class Dist>
double entropy_integral(const Dist& d, const QuadratureConfig& cfg) {
  cfg.validate();
  const double upper = truncation_point(d, cfg.abs_tol / 10.0);
  const auto integrand = [&d](double y) { return neg_f_log_f(d.log_pdf(y)); };
  return integrate(integrand, 0.0, upper, 0.9 * cfg.abs_tol,
                   cfg.max_subdivisions)
      .value;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw std::domain_error("abs_tol must be positive, got " +
                            std::to_string(abs_tol));
  }
  if (max_subdivisions < 1) {
    throw std::domain_error("max_subdivisions must be at least 1");
  }
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, int max_subdivisions) {
  // Max-heap on the error estimate.
  std::vector<Panel> panels{gauss_kronrod(f, a, b)};
  const auto error_sum = [&panels] {
    double sum = 0.0;
    for (const auto& p : panels) sum += p.error;
    return sum;
  };
  double total_error = panels.front().error;
  // Summed afresh each step so rounding drift cannot fake convergence.
  while (total_error > abs_tol) {
    if (static_cast<int>(panels.size()) >= max_subdivisions) {
      throw ConvergenceError(
          "adaptive quadrature did not reach tolerance " +
          std::to_string(abs_tol) + " within " +
          std::to_string(max_subdivisions) + " subdivisions (estimate " +
          std::to_string(total_error) + ")");
    }
    std::pop_heap(panels.begin(), panels.end());
    const Panel worst = panels.back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ConvergenceError("adaptive quadrature hit the resolution limit");
    }
    panels.back() = gauss_kronrod(f, worst.a, mid);
    std::push_heap(panels.begin(), panels.end());
    panels.push_back(gauss_kronrod(f, mid, worst.b));
    std::push_heap(panels.begin(), panels.end());
    total_error = error_sum();
  }
  QuadratureResult result{0.0, total_error, static_cast<int>(panels.size())};
  for (const auto& p : panels) result.value += p.value;
  return result;
}

double neg_f_log_f(double log_f) noexcept {
  if (std::isinf(log_f) && log_f < 0.0) return 0.0;
  const double f = std::exp(log_f);
  return f == 0.0 ? 0.0 : -f * log_f;
}

double truncation_point(const Exponential& d, double bound) {
  // |ln f| <= |ln r| + r y, so the tail is <= e^{-rU} (|ln r| + rU + 1).
  const double r = d.rate();
  const double a = std::abs(std::log(r));
  return grow_until(20.0 / r, bound, [&](double u) {
    return std::exp(-r * u) * (a + r * u + 1.0);
  });
}

double truncation_point(const Erlang2& d, double bound) {
  // For y >= U >= 1, |ln f| <= |2 ln r| + (1 + r) y. Integrating against
  // r^2 y e^{-ry} gives the bound below.
  const double r = d.rate();
  const double a = std::abs(2.0 * std::log(r));
  const double b = 1.0 + r;
  return grow_until(std::max(20.0 / r, 1.0), bound, [&](double u) {
    const double m1 = u / r + 1.0 / (r * r);
    const double m2 = u * u / r + 2.0 * u / (r * r) + 2.0 / (r * r * r);
    return r * r * std::exp(-r * u) * (a * m1 + b * m2);
  });
}

double truncation_point(const HypoexpTwo& d, double bound) {
  if (d.degenerate()) return truncation_point(Erlang2(d.rates().common_rate()), bound);
  // For y >= U: f <= c e^{-lo y} and
  // |ln f| <= |ln c| + lo y + |ln(1 - e^{-(hi-lo) U})|.
  const double hi = d.rates().hi();
  const double lo = d.rates().lo();
  const double c = *d.norm_const();
  const double log_c = std::abs(std::log(c));
  return grow_until(20.0 / lo, bound, [&](double u) {
    const double gap_term = -std::log(-std::expm1(-(hi - lo) * u));
    return c * std::exp(-lo * u) * ((log_c + gap_term + 1.0) / lo + u);
  });
}

double entropy_quadrature(const Exponential& d, const QuadratureConfig& cfg) {
  return entropy_integral(d, cfg);
}

double entropy_quadrature(const Erlang2& d, const QuadratureConfig& cfg) {
  return entropy_integral(d, cfg);
}

double entropy_quadrature(const HypoexpTwo& d, const QuadratureConfig& cfg) {
  return entropy_integral(d, cfg);
}

double total_probability(const HypoexpTwo& d, const QuadratureConfig& cfg) {
  cfg.validate();
  const double upper = truncation_point(d, cfg.abs_tol / 10.0);
  const auto pdf = [&d](double y) { return d.pdf(y); };
  return integrate(pdf, 0.0, upper, 0.9 * cfg.abs_tol, cfg.max_subdivisions)
      .value;
}

EstimateWithError entropy_monte_carlo(const HypoexpTwo& d, std::int64_t n,
                                      std::uint64_t seed) {
  if (n < 2) {
    throw std::domain_error("entropy_monte_carlo needs n >= 2, got " +
                            std::to_string(n));
  }
  Rng rng(seed);
  // Welford accumulation of -ln f(Y_i).
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double value = -d.log_pdf(d.sample(rng));
    const double delta = value - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (value - mean);
  }
  const double variance = m2 / static_cast<double>(n - 1);
  return {mean, std::sqrt(variance / static_cast<double>(n)), n};
}

double gr_log_integral(double u, double v, const QuadratureConfig& cfg) {
  checked_rate(u, "u");
  checked_rate(v, "v");
  cfg.validate();
  const double a = u / v;
  const double sliver_target = cfg.abs_tol / 10.0 * v;

  // Near 0: |xi^{a-1} ln(1-xi)| <= xi^a / (1-xi), integral <= d^{a+1} / ((a+1)(1-d)).
  double d0 = 0.25;
  while (std::pow(d0, a + 1.0) / ((a + 1.0) * (1.0 - d0)) >= sliver_target) d0 *= 0.5;
  // Near 1: xi^{a-1} <= max(1, (1-d)^{a-1}) and int_0^d -ln t dt = d (1 - ln d).
  double d1 = 0.25;
  while (std::max(1.0, std::pow(1.0 - d1, a - 1.0)) * d1 * (1.0 - std::log(d1)) >=
         sliver_target) {
    d1 *= 0.5;
  }

  const auto integrand = [a](double xi) {
    return std::pow(xi, a - 1.0) * std::log1p(-xi);
  };
  const double inner = integrate(integrand, d0, 1.0 - d1, 0.8 * cfg.abs_tol * v,
                                 cfg.max_subdivisions)
                           .value;
  return inner / v;
}

double gr_log_closed_form(double u, double v) {
  checked_rate(u, "u");
  checked_rate(v, "v");
  return -(kEulerGamma + digamma(u / v + 1.0)) / u;
}

}  // namespace hypoent
