#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include "hypoent/dist.hpp"
#include "hypoent/oracle.hpp"

using hypoent::Erlang2;
using hypoent::HypoexpTwo;
using hypoent::RatePair;
using hypoent::Rng;

namespace {

// Critical value of the one-sample Kolmogorov–Smirnov statistic at
// significance 0.001 for large n.
double ks_critical_001(std::size_t n) { return 1.94947 / std::sqrt(static_cast<double>(n)); }

double ks_statistic(std::vector<double> samples, const HypoexpTwo& d) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = d.cdf(samples[i]);
    worst = std::max({worst, std::abs((i + 1) / n - f), std::abs(f - i / n)});
  }
  return worst;
}

std::vector<double> draw(const HypoexpTwo& d, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& y : out) y = d.sample(rng);
  return out;
}

}  // namespace

TEST_CASE("RatePair canonicalizes and validates") {
  const RatePair p(1.0, 2.0);
  CHECK(p.hi() == 2.0);
  CHECK(p.lo() == 1.0);
  CHECK(p == RatePair(2.0, 1.0));
  CHECK_FALSE(p.degenerate());
  CHECK(RatePair(3.0, 3.0).degenerate());
  CHECK(RatePair(1.0, 1.0 + 5e-13).degenerate());
  CHECK_FALSE(RatePair(1.0, 1.0 + 1e-10).degenerate());
  CHECK_THROWS_AS(RatePair(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(RatePair(1.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(RatePair(1.0, std::numeric_limits<double>::infinity()),
                  std::domain_error);
  CHECK_THROWS_AS(RatePair(std::numeric_limits<double>::quiet_NaN(), 1.0),
                  std::domain_error);
}

TEST_CASE("HypoexpTwo normalization constant") {
  const HypoexpTwo d(2.0, 1.0);
  REQUIRE(d.norm_const().has_value());
  CHECK(*d.norm_const() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_FALSE(HypoexpTwo(1.0, 1.0).norm_const().has_value());
}

TEST_CASE("hypoexp pdf spot values") {
  const HypoexpTwo d(2.0, 1.0);
  CHECK(d.pdf(0.0) == 0.0);
  CHECK(std::abs(d.pdf(std::log(2.0)) - 0.5) < 1e-15);
  CHECK(d.pdf(-1.0) == 0.0);
  // Against the textbook form c (e^{-lo y} - e^{-hi y}).
  for (double y : {0.1, 0.7, 3.0, 12.0}) {
    CHECK(d.pdf(y) == doctest::Approx(2.0 * (std::exp(-y) - std::exp(-2.0 * y))).epsilon(1e-13));
  }
}

TEST_CASE("hypoexp cdf spot values") {
  const HypoexpTwo d(2.0, 1.0);
  CHECK(d.cdf(0.0) == 0.0);
  CHECK(d.cdf(-3.0) == 0.0);
  CHECK(std::abs(d.cdf(100.0) - 1.0) < 1e-12);
  CHECK(std::abs(d.cdf(1.0) - 0.39957640089372805) < 1e-15);
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      [&](double y) { return d.pdf(y); }, 0.0, 1.0, 10, 1e-14);
  CHECK(std::abs(d.cdf(1.0) - integral) < 1e-13);
}

TEST_CASE("hypoexp mean") {
  CHECK(HypoexpTwo(2.0, 2.0).mean() == 1.0);
  CHECK(HypoexpTwo(5.0, 1.25).mean() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(HypoexpTwo(1.0, 1.0).mean() == 2.0);
}

TEST_CASE("degenerate pair uses Erlang-2 forms") {
  const HypoexpTwo d(1.5, 1.5);
  const Erlang2 e(1.5);
  for (double y : {0.0, 0.3, 1.0, 4.0}) {
    CHECK(d.pdf(y) == e.pdf(y));
    CHECK(d.cdf(y) == e.cdf(y));
  }
  // Just outside the tolerance the expm1 form is continuous with it.
  const HypoexpTwo near(1.5 * (1.0 + 1e-9), 1.5);
  for (double y : {0.3, 1.0, 4.0}) {
    CHECK(near.pdf(y) == doctest::Approx(e.pdf(y)).epsilon(1e-8));
    CHECK(near.cdf(y) == doctest::Approx(e.cdf(y)).epsilon(1e-8));
  }
}

TEST_CASE("density integrates to one on a log grid") {
  const double grid[] = {0.1, 0.316227766, 1.0, 3.16227766, 10.0};
  for (double a : grid) {
    for (double b : grid) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(std::abs(hypoent::total_probability(HypoexpTwo(a, b)) - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("cdf derivative matches pdf") {
  const HypoexpTwo d(2.0, 1.0);
  const double h = 1e-5;
  for (double y : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double slope = (d.cdf(y + h) - d.cdf(y - h)) / (2.0 * h);
    CHECK(std::abs(slope - d.pdf(y)) <= 1e-6);
  }
}

TEST_CASE("cdf is monotone") {
  const HypoexpTwo d(10.0, 0.3);
  double previous = 0.0;
  for (double y = 0.0; y < 60.0; y += 0.05) {
    const double f = d.cdf(y);
    CHECK(f >= previous);
    CHECK(f <= 1.0);
    previous = f;
  }
}

TEST_CASE("construction order does not matter") {
  const HypoexpTwo ab(0.7, 3.1);
  const HypoexpTwo ba(3.1, 0.7);
  for (double y : {0.0, 0.2, 1.0, 7.0}) {
    CHECK(ab.pdf(y) == ba.pdf(y));
    CHECK(ab.cdf(y) == ba.cdf(y));
  }
  CHECK(ab.mean() == ba.mean());
  CHECK(draw(ab, 100, 9) == draw(ba, 100, 9));
}

TEST_CASE("sampling mean and support") {
  const HypoexpTwo d(2.0, 1.0);
  const auto ys = draw(d, 1000000, 42);
  double sum = 0.0;
  for (double y : ys) sum += y;
  const double mean = sum / ys.size();
  double ss = 0.0;
  for (double y : ys) ss += (y - mean) * (y - mean);
  const double stderr_mean = std::sqrt(ss / (ys.size() - 1) / ys.size());
  CHECK(std::abs(mean - 1.5) <= 4.0 * stderr_mean);
  CHECK(*std::min_element(ys.begin(), ys.end()) >= 0.0);
}

TEST_CASE("sampling is deterministic per seed") {
  const HypoexpTwo d(2.0, 1.0);
  CHECK(draw(d, 1000, 7) == draw(d, 1000, 7));
  CHECK(draw(d, 1000, 7) != draw(d, 1000, 8));
}

TEST_CASE("samples pass a Kolmogorov–Smirnov test") {
  for (const auto& d : {HypoexpTwo(2.0, 1.0), HypoexpTwo(10.0, 0.3)}) {
    const auto ys = draw(d, 100000, 2024);
    CAPTURE(d.rates().hi());
    CHECK(ks_statistic(ys, d) < ks_critical_001(ys.size()));
  }
}

TEST_CASE("Rng uniform stays in (0, 1]") {
  Rng rng(0);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform_open_zero();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 100; ++i) seen.insert(a());
  CHECK(seen.size() == 100);
  Rng c(123);
  for (int i = 0; i < 100; ++i) CHECK(b() == c());
}

TEST_CASE("exponential and Erlang-2 basics") {
  const hypoent::Exponential x(2.0);
  CHECK(x.pdf(0.0) == 2.0);
  CHECK(x.pdf(-0.1) == 0.0);
  CHECK(x.cdf(std::log(2.0) / 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(x.mean() == 0.5);
  const Erlang2 e(2.0);
  CHECK(e.pdf(0.5) == doctest::Approx(4.0 * 0.5 * std::exp(-1.0)).epsilon(1e-15));
  CHECK(e.mean() == 1.0);
  CHECK_THROWS_AS(hypoent::Exponential(0.0), std::domain_error);
  CHECK_THROWS_AS(Erlang2(-1.0), std::domain_error);
}
