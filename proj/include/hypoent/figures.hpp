#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hypoent {

enum class Figure { kRateFamilies, kMeanConstrained };
enum class DataFormat { kCsv, kJson };

/// One row of the rate-family data in long format. `lambda_w` is empty on
/// the `single` curve, which has no second phase.
struct RateFamilyRow {
  std::string curve;  // "hypoexp", "erlang2" or "single"
  std::optional<double> lambda_w;
  double lambda_x;
  double entropy_nats;
};

struct MeanConstrainedRow {
  double lambda;
  double lambda_x;  // min(lambda, lambda / (lambda - 1))
  double lambda_w;  // max(lambda, lambda / (lambda - 1))
  double entropy_nats;
  double reference_exp;      // exponential with rate 1
  double reference_erlang2;  // Erlang-2 with rate 2
};

/// n >= 2 log-spaced points from lo to hi; both endpoints are exact.
std::vector<double> log_space(double lo, double hi, int n);

/// Entropy against lambda_x for lambda_w = 0.2, 0.4, ..., 2.0, with
/// lambda_x on `grid_points` log-spaced values in [0.01, lambda_w (1 - 1e-3)],
/// followed by the Erlang-2 and single-exponential curves on [0.01, 2].
std::vector<RateFamilyRow> rate_family_rows(int grid_points);

/// Entropy at unit mean for lambda on `grid_points` log-spaced values in
/// [1.01, 100]. lambda = 2, the Erlang-2 point, is merged into the grid
/// when the grid does not already contain it.
std::vector<MeanConstrainedRow> mean_constrained_rows(int grid_points);

/// Locale-independent rendering with 17 significant digits, which
/// round-trips every double exactly.
std::string format_real(double value);

void write_rows(std::ostream& out, const std::vector<RateFamilyRow>& rows,
                DataFormat format);
void write_rows(std::ostream& out, const std::vector<MeanConstrainedRow>& rows,
                DataFormat format);

/// Generates and writes the data for `figure`.
void write_figure(std::ostream& out, Figure figure, int grid_points,
                  DataFormat format);

}  // namespace hypoent
