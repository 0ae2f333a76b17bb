// hypoent: command-line access to the closed-form entropies, the oracle
// checks and the figure data.
//
// Exit codes: 0 ok, 1 verification failure, 2 argument error,
// 3 quadrature convergence failure, 4 I/O failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypoent/entropy.hpp"
#include "hypoent/figures.hpp"
#include "hypoent/oracle.hpp"
#include "hypoent/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitIo = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const CLI::Validator kRate(
    [](std::string& text) -> std::string {
      double value = 0.0;
      try {
        std::size_t used = 0;
        value = std::stod(text, &used);
        if (used != text.size()) return "not a number: " + text;
      } catch (const std::exception&) {
        return "not a number: " + text;
      }
      if (!std::isfinite(value) || !(value > 0.0)) {
        return "must be a positive finite rate, got " + text;
      }
      return {};
    },
    "RATE");

// Printed records use 17 significant digits with trailing zeros kept. The
// program never calls setlocale, so printf runs in the "C" locale.
std::string fmt17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%#.17g", value);
  return buffer;
}

hypoent::QuadratureConfig quad_config(double tol) {
  hypoent::QuadratureConfig cfg;
  cfg.abs_tol = tol;
  return cfg;
}

struct EntropyArgs {
  double lambda_w = 0.0;
  double lambda_x = 0.0;
  std::string method = "closed";
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  double tol = hypoent::QuadratureConfig{}.abs_tol;
  CLI::Option* n_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

int run_entropy(const EntropyArgs& args) {
  const hypoent::HypoexpTwo d(args.lambda_w, args.lambda_x);
  if (args.method == "closed") {
    std::cout << "entropy_nats: " << fmt17(hypoent::hypoexp_entropy(d.rates())) << '\n';
  } else if (args.method == "quad") {
    std::cout << "entropy_nats: "
              << fmt17(hypoent::entropy_quadrature(d, quad_config(args.tol))) << '\n';
  } else {
    if (args.n_opt->count() == 0 || args.seed_opt->count() == 0) {
      throw UsageError("--method mc requires both --n and --seed");
    }
    if (args.n < 2) throw UsageError("--n must be at least 2");
    const auto mc = hypoent::entropy_monte_carlo(d, args.n, args.seed);
    std::cout << "entropy_nats: " << fmt17(mc.estimate) << '\n'
              << "std_error: " << fmt17(mc.std_error) << '\n'
              << "n_samples: " << mc.n_samples << '\n';
  }
  return kExitOk;
}

int run_mi(double signal_rate, double noise_rate) {
  std::cout << "mutual_information: "
            << fmt17(hypoent::mutual_info_aen(signal_rate, noise_rate))
            << " nats per server request\n";
  return kExitOk;
}

int run_cond(const hypoent::LightGatedModel& model) {
  const auto h = hypoent::cond_entropy_light_branches(model);
  std::cout << "h(Y|L): " << fmt17(h.total) << '\n'
            << "h(Y|L=off): " << fmt17(h.off) << '\n'
            << "h(Y|L=on): " << fmt17(h.on) << '\n';
  return kExitOk;
}

int run_figure(const std::string& figure, int grid_points,
               const std::string& out_path, const std::string& format) {
  const auto which = figure == "fig1" ? hypoent::Figure::kRateFamilies
                                      : hypoent::Figure::kMeanConstrained;
  const auto data_format =
      format == "json" ? hypoent::DataFormat::kJson : hypoent::DataFormat::kCsv;
  std::ostringstream buffer;
  hypoent::write_figure(buffer, which, grid_points, data_format);
  if (out_path.empty() || out_path == "-") {
    std::cout << buffer.str();
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + out_path + " for writing");
  file << buffer.str();
  file.close();
  if (!file) throw IoError("failed writing " + out_path);
  return kExitOk;
}

int run_verify(const hypoent::VerifyOptions& options) {
  if (options.samples < 2) throw UsageError("--samples must be at least 2");
  const auto results = hypoent::run_verification(options);
  hypoent::print_report(std::cout, results);
  return hypoent::all_passed(results) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential entropy of the sum of two independent exponentials"};
  app.require_subcommand(1);

  EntropyArgs entropy;
  auto* entropy_cmd = app.add_subcommand("entropy", "Entropy of Y = W + X in nats");
  entropy_cmd->add_option("--lambda-w", entropy.lambda_w, "Rate of W")
      ->required()->check(kRate);
  entropy_cmd->add_option("--lambda-x", entropy.lambda_x, "Rate of X")
      ->required()->check(kRate);
  entropy_cmd->add_option("--method", entropy.method, "closed, quad or mc")
      ->check(CLI::IsMember({"closed", "quad", "mc"}));
  entropy.n_opt = entropy_cmd->add_option("--n", entropy.n, "Monte-Carlo sample count");
  entropy.seed_opt = entropy_cmd->add_option("--seed", entropy.seed, "Monte-Carlo seed");
  entropy_cmd->add_option("--tol", entropy.tol, "Quadrature absolute tolerance")
      ->check(CLI::PositiveNumber);

  double signal_rate = 0.0;
  double noise_rate = 0.0;
  auto* mi_cmd = app.add_subcommand(
      "mi", "Mutual information of the additive exponential noise channel");
  mi_cmd->add_option("--signal-rate", signal_rate, "Rate of the input X")
      ->required()->check(kRate);
  mi_cmd->add_option("--noise-rate", noise_rate, "Rate of the noise W")
      ->required()->check(kRate);

  hypoent::LightGatedModel model{};
  auto* cond_cmd = app.add_subcommand(
      "cond-entropy", "Conditional entropy h(Y|L) of the light-gated model");
  cond_cmd->add_option("--lambda-x", model.lambda_x)->required()->check(kRate);
  cond_cmd->add_option("--lambda-w-on", model.lambda_w_on)->required()->check(kRate);
  cond_cmd->add_option("--lambda-w-off", model.lambda_w_off)->required()->check(kRate);
  cond_cmd->add_option("--p-on", model.p_on, "Probability that the light is on")
      ->required()->check(CLI::Range(0.0, 1.0));

  std::string figure;
  int grid_points = 200;
  std::string out_path;
  std::string format = "csv";
  auto* figure_cmd = app.add_subcommand("figure", "Write figure data");
  figure_cmd->add_option("figure", figure, "fig1 or fig2")
      ->required()->check(CLI::IsMember({"fig1", "fig2"}));
  figure_cmd->add_option("--grid-points", grid_points, "Points per curve")
      ->check(CLI::Range(2, 10000000));
  figure_cmd->add_option("--out", out_path, "Output path (default stdout)");
  figure_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  hypoent::VerifyOptions verify;
  double verify_tol = verify.quadrature.abs_tol;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle agreement suite");
  verify_cmd->add_option("--seed", verify.seed, "Base Monte-Carlo seed");
  verify_cmd->add_option("--samples", verify.samples, "Monte-Carlo samples per run");
  verify_cmd->add_option("--tol", verify_tol, "Quadrature absolute tolerance")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--perturb-closed", verify.closed_form_offset)
      ->group("");  // mutation testing only

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (*entropy_cmd) return run_entropy(entropy);
    if (*mi_cmd) return run_mi(signal_rate, noise_rate);
    if (*cond_cmd) return run_cond(model);
    if (*figure_cmd) return run_figure(figure, grid_points, out_path, format);
    if (*verify_cmd) {
      verify.quadrature.abs_tol = verify_tol;
      return run_verify(verify);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const hypoent::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitBadArgs;
}
