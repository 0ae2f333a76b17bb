#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypoent/dist.hpp"
#include "hypoent/entropy.hpp"
#include "hypoent/figures.hpp"
#include "hypoent/oracle.hpp"
#include "hypoent/specfun.hpp"
#include "hypoent/verify.hpp"

namespace py = pybind11;
using namespace hypoent;

namespace {

QuadratureConfig make_config(double abs_tol, int max_subdivisions) {
  QuadratureConfig cfg;
  cfg.abs_tol = abs_tol;
  cfg.max_subdivisions = max_subdivisions;
  return cfg;
}

std::string figure_text(const std::string& figure, int grid_points,
                        const std::string& format) {
  Figure which;
  if (figure == "fig1") {
    which = Figure::kRateFamilies;
  } else if (figure == "fig2") {
    which = Figure::kMeanConstrained;
  } else {
    throw py::value_error("figure must be 'fig1' or 'fig2'");
  }
  if (format != "csv" && format != "json") {
    throw py::value_error("format must be 'csv' or 'json'");
  }
  std::ostringstream out;
  write_figure(out, which, grid_points,
               format == "json" ? DataFormat::kJson : DataFormat::kCsv);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Differential entropy of the sum of two independent exponentials";

  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def("euler_gamma", &euler_gamma);
  m.def("digamma", &digamma, py::arg("x"));
  m.def("digamma_minus_log", &digamma_minus_log, py::arg("x"));

  py::class_<RatePair>(m, "RatePair")
      .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("hi", &RatePair::hi)
      .def_property_readonly("lo", &RatePair::lo)
      .def_property_readonly("degenerate", &RatePair::degenerate)
      .def("__eq__", [](const RatePair& a, const RatePair& b) { return a == b; })
      .def("__repr__", [](const RatePair& p) {
        return "RatePair(hi=" + format_real(p.hi()) + ", lo=" + format_real(p.lo()) + ")";
      });

  py::class_<HypoexpTwo>(m, "HypoexpTwo")
      .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
      .def(py::init<RatePair>(), py::arg("rates"))
      .def_property_readonly("rates", &HypoexpTwo::rates)
      .def_property_readonly("degenerate", &HypoexpTwo::degenerate)
      .def_property_readonly("norm_const", &HypoexpTwo::norm_const)
      .def("pdf", &HypoexpTwo::pdf, py::arg("y"))
      .def("log_pdf", &HypoexpTwo::log_pdf, py::arg("y"))
      .def("cdf", &HypoexpTwo::cdf, py::arg("y"))
      .def("mean", &HypoexpTwo::mean)
      .def(
          "sample",
          [](const HypoexpTwo& d, std::int64_t n, std::uint64_t seed) {
            if (n < 0) throw py::value_error("n must be nonnegative");
            Rng rng(seed);
            std::vector<double> out(static_cast<std::size_t>(n));
            for (auto& y : out) y = d.sample(rng);
            return out;
          },
          py::arg("n"), py::arg("seed"));

  m.def("exp_entropy", &exp_entropy, py::arg("rate"));
  m.def("erlang2_entropy", &erlang2_entropy, py::arg("rate"));
  m.def("hypoexp_entropy", &hypoexp_entropy, py::arg("rates"));
  m.def(
      "hypoexp_entropy",
      [](double a, double b) { return hypoexp_entropy(RatePair(a, b)); },
      py::arg("a"), py::arg("b"));
  m.def("mutual_info_aen", &mutual_info_aen, py::arg("signal_rate"), py::arg("noise_rate"));
  m.def("mutual_info_aen_direct", &mutual_info_aen_direct, py::arg("signal_rate"),
        py::arg("noise_rate"));
  m.def(
      "cond_entropy_light",
      [](double lambda_x, double lambda_w_on, double lambda_w_off, double p_on) {
        const auto h = cond_entropy_light_branches({lambda_x, lambda_w_on, lambda_w_off, p_on});
        return py::make_tuple(h.total, h.off, h.on);
      },
      py::arg("lambda_x"), py::arg("lambda_w_on"), py::arg("lambda_w_off"), py::arg("p_on"),
      "Returns (h(Y|L), h(Y|L=off), h(Y|L=on)).");
  m.def("mean_constrained_rates", &mean_constrained_rates, py::arg("lam"));

  py::class_<EstimateWithError>(m, "EstimateWithError")
      .def_readonly("estimate", &EstimateWithError::estimate)
      .def_readonly("std_error", &EstimateWithError::std_error)
      .def_readonly("n_samples", &EstimateWithError::n_samples);

  m.def(
      "entropy_quadrature",
      [](const HypoexpTwo& d, double abs_tol, int max_subdivisions) {
        return entropy_quadrature(d, make_config(abs_tol, max_subdivisions));
      },
      py::arg("dist"), py::arg("abs_tol") = 1e-10, py::arg("max_subdivisions") = 2000);
  m.def("entropy_monte_carlo", &entropy_monte_carlo, py::arg("dist"), py::arg("n"),
        py::arg("seed"));
  m.def(
      "gr_log_integral",
      [](double u, double v, double abs_tol, int max_subdivisions) {
        return gr_log_integral(u, v, make_config(abs_tol, max_subdivisions));
      },
      py::arg("u"), py::arg("v"), py::arg("abs_tol") = 1e-10,
      py::arg("max_subdivisions") = 2000);
  m.def("gr_log_closed_form", &gr_log_closed_form, py::arg("u"), py::arg("v"));

  m.def("figure_data", &figure_text, py::arg("figure"), py::arg("grid_points") = 200,
        py::arg("format") = "csv", "Figure data as CSV or JSON text.");

  m.def(
      "verify",
      [](std::uint64_t seed, std::int64_t samples) {
        VerifyOptions options;
        options.seed = seed;
        options.samples = samples;
        py::list rows;
        for (const auto& r : run_verification(options)) {
          rows.append(py::make_tuple(r.name, r.max_deviation, r.threshold, r.passed));
        }
        return rows;
      },
      py::arg("seed") = 42, py::arg("samples") = 100000,
      "Runs the oracle agreement suite; returns (name, deviation, threshold, passed) rows.");
}
