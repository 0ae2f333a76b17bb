#include "hypoent/figures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hypoent/entropy.hpp"

namespace hypoent {
namespace {

constexpr double kFamilyLambdaXMin = 0.01;
constexpr double kFamilyLambdaMax = 2.0;
constexpr double kFamilyUpperShrink = 1e-3;
constexpr int kFamilyCurves = 10;  // lambda_w = 0.2 k, k = 1..10

constexpr double kMeanLambdaMin = 1.01;
constexpr double kMeanLambdaMax = 100.0;
constexpr double kErlangPoint = 2.0;

void check_grid(int grid_points) {
  if (grid_points < 2) {
    throw std::domain_error("grid_points must be at least 2, got " +
                            std::to_string(grid_points));
  }
}

nlohmann::ordered_json number_or_null(const std::optional<double>& value) {
  if (value) return *value;
  return nullptr;
}

}  // namespace

std::vector<double> log_space(double lo, double hi, int n) {
  check_grid(n);
  if (!(lo > 0.0) || !(hi > lo)) {
    throw std::domain_error("log_space needs 0 < lo < hi");
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = std::exp(log_lo + step * i);
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<RateFamilyRow> rate_family_rows(int grid_points) {
  check_grid(grid_points);
  std::vector<RateFamilyRow> rows;
  rows.reserve(static_cast<std::size_t>(grid_points) * (kFamilyCurves + 2));
  for (int k = 1; k <= kFamilyCurves; ++k) {
    const double lambda_w = k / 5.0;
    const auto xs = log_space(kFamilyLambdaXMin,
                              lambda_w * (1.0 - kFamilyUpperShrink), grid_points);
    for (double lambda_x : xs) {
      rows.push_back({"hypoexp", lambda_w, lambda_x,
                      hypoexp_entropy(RatePair(lambda_w, lambda_x))});
    }
  }
  const auto shared = log_space(kFamilyLambdaXMin, kFamilyLambdaMax, grid_points);
  for (double lambda : shared) {
    rows.push_back({"erlang2", lambda, lambda, erlang2_entropy(lambda)});
  }
  for (double lambda : shared) {
    rows.push_back({"single", std::nullopt, lambda, exp_entropy(lambda)});
  }
  return rows;
}

std::vector<MeanConstrainedRow> mean_constrained_rows(int grid_points) {
  auto lambdas = log_space(kMeanLambdaMin, kMeanLambdaMax, grid_points);
  if (std::find(lambdas.begin(), lambdas.end(), kErlangPoint) == lambdas.end()) {
    lambdas.insert(std::upper_bound(lambdas.begin(), lambdas.end(), kErlangPoint),
                   kErlangPoint);
  }
  const double reference_exp = exp_entropy(1.0);
  const double reference_erlang2 = erlang2_entropy(2.0);
  std::vector<MeanConstrainedRow> rows;
  rows.reserve(lambdas.size());
  for (double lambda : lambdas) {
    const RatePair rates = mean_constrained_rates(lambda);
    rows.push_back({lambda, rates.lo(), rates.hi(), hypoexp_entropy(rates),
                    reference_exp, reference_erlang2});
  }
  return rows;
}

std::string format_real(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

void write_rows(std::ostream& out, const std::vector<RateFamilyRow>& rows,
                DataFormat format) {
  if (format == DataFormat::kCsv) {
    out << "curve,lambda_w,lambda_x,entropy_nats\n";
    for (const auto& row : rows) {
      out << row.curve << ','
          << (row.lambda_w ? format_real(*row.lambda_w) : std::string()) << ','
          << format_real(row.lambda_x) << ',' << format_real(row.entropy_nats)
          << '\n';
    }
    return;
  }
  auto records = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    records.push_back({{"curve", row.curve},
                       {"lambda_w", number_or_null(row.lambda_w)},
                       {"lambda_x", row.lambda_x},
                       {"entropy_nats", row.entropy_nats}});
  }
  out << records.dump(1) << '\n';
}

void write_rows(std::ostream& out, const std::vector<MeanConstrainedRow>& rows,
                DataFormat format) {
  if (format == DataFormat::kCsv) {
    out << "lambda,lambda_x,lambda_w,entropy_nats,reference_exp,"
           "reference_erlang2\n";
    for (const auto& row : rows) {
      out << format_real(row.lambda) << ',' << format_real(row.lambda_x) << ','
          << format_real(row.lambda_w) << ',' << format_real(row.entropy_nats)
          << ',' << format_real(row.reference_exp) << ','
          << format_real(row.reference_erlang2) << '\n';
    }
    return;
  }
  auto records = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    records.push_back({{"lambda", row.lambda},
                       {"lambda_x", row.lambda_x},
                       {"lambda_w", row.lambda_w},
                       {"entropy_nats", row.entropy_nats},
                       {"reference_exp", row.reference_exp},
                       {"reference_erlang2", row.reference_erlang2}});
  }
  out << records.dump(1) << '\n';
}

void write_figure(std::ostream& out, Figure figure, int grid_points,
                  DataFormat format) {
  switch (figure) {
    case Figure::kRateFamilies:
      write_rows(out, rate_family_rows(grid_points), format);
      return;
    case Figure::kMeanConstrained:
      write_rows(out, mean_constrained_rows(grid_points), format);
      return;
  }
}

}  // namespace hypoent
