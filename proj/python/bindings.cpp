#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

#include "modelavg/distributions.hpp"
#include "modelavg/estimation.hpp"
#include "modelavg/federation.hpp"
#include "modelavg/montecarlo.hpp"
#include "modelavg/table1.hpp"
#include "modelavg/theory.hpp"

namespace py = pybind11;
using namespace modelavg;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Python side: an int, or float('inf') / None for an infinite sample count.
SampleSize to_sample_size(const py::object& n) {
  if (n.is_none()) return SampleSize::infinite();
  if (py::isinstance<py::float_>(n)) {
    const double v = n.cast<double>();
    if (std::isinf(v) && v > 0) return SampleSize::infinite();
    throw PreconditionError("sample count must be an int or float('inf')");
  }
  return SampleSize(n.cast<std::uint64_t>());
}

py::object from_sample_size(const SampleSize& n) {
  if (n.is_infinite()) return py::float_(kInf);
  return py::int_(n.count());
}

double from_extended(const Extended& e) { return e.is_infinite() ? kInf : e.value(); }

Extended to_extended(double v) { return std::isinf(v) ? Extended::infinity() : Extended(v); }

std::vector<SampleSource> to_sources(const std::vector<std::pair<DistributionSpec, std::uint64_t>>& v) {
  std::vector<SampleSource> out;
  for (const auto& [spec, n] : v) out.push_back({spec, n});
  return out;
}

}  // namespace

PYBIND11_MODULE(_modelavg, m) {
  m.doc() = "Optimal weighted model averaging for scalar mean estimation";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<UnsupportedInSimulation>(m, "UnsupportedInSimulation",
                                                  PyExc_NotImplementedError);

  py::enum_<Family>(m, "Family")
      .value("Normal", Family::Normal)
      .value("Uniform", Family::Uniform)
      .value("Bernoulli", Family::Bernoulli)
      .value("Exponential", Family::Exponential)
      .value("PointMass", Family::PointMass);

  py::class_<DistributionSpec>(m, "DistributionSpec")
      .def_static("normal", &DistributionSpec::normal, py::arg("mean"), py::arg("sd"))
      .def_static("uniform", &DistributionSpec::uniform, py::arg("lo"), py::arg("hi"))
      .def_static("bernoulli", &DistributionSpec::bernoulli, py::arg("p"))
      .def_static("exponential", &DistributionSpec::exponential, py::arg("rate"))
      .def_static("point_mass", &DistributionSpec::point_mass, py::arg("c"))
      .def_property_readonly("family", &DistributionSpec::family)
      .def_property_readonly("params", &DistributionSpec::params)
      .def("mean", &DistributionSpec::mean)
      .def("variance", &DistributionSpec::variance)
      .def("__repr__", &describe);

  m.def("moments", [](const DistributionSpec& s) {
    const auto mo = moments(s);
    return py::make_tuple(mo.mean, mo.variance);
  });
  m.def(
      "sample",
      [](const DistributionSpec& s, std::size_t n, std::uint64_t seed, std::uint64_t stream) {
        return sample(s, n, SeedSpec{seed, stream});
      },
      py::arg("spec"), py::arg("n"), py::arg("seed"), py::arg("stream") = 0);

  m.def("empirical_mean", [](const std::vector<double>& v) { return empirical_mean(v); });
  m.def("weighted_average", &weighted_average, py::arg("local"), py::arg("helper"),
        py::arg("alpha"));
  m.def("shrink", &shrink, py::arg("local"), py::arg("anchor"), py::arg("alpha"));
  m.def("squared_error", &squared_error);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init([](double mu_x, double var_x, std::uint64_t n_x, double mu_y, double var_y,
                       const py::object& n_y) {
             return Scenario(mu_x, var_x, n_x, mu_y, var_y, to_sample_size(n_y));
           }),
           py::arg("mu_x"), py::arg("var_x"), py::arg("n_x"), py::arg("mu_y"), py::arg("var_y"),
           py::arg("n_y"))
      .def_property_readonly("mu_x", &Scenario::mu_x)
      .def_property_readonly("var_x", &Scenario::var_x)
      .def_property_readonly("n_x", &Scenario::n_x)
      .def_property_readonly("mu_y", &Scenario::mu_y)
      .def_property_readonly("var_y", &Scenario::var_y)
      .def_property_readonly("n_y", [](const Scenario& s) { return from_sample_size(s.n_y()); })
      .def_property_readonly("var_xbar", &Scenario::var_xbar)
      .def_property_readonly("var_ybar", &Scenario::var_ybar)
      .def_property_readonly("bias2", &Scenario::bias2);

  py::class_<ErrorProfile>(m, "ErrorProfile")
      .def_readonly("e0", &ErrorProfile::e0)
      .def_readonly("e1", &ErrorProfile::e1)
      .def_readonly("alpha_star", &ErrorProfile::alpha_star)
      .def_readonly("degenerate", &ErrorProfile::degenerate)
      .def("ese_optimal", &ErrorProfile::ese_optimal)
      .def("break_even_alpha", &ErrorProfile::break_even_alpha);

  m.def("make_profile", &make_profile, py::arg("e0"), py::arg("e1"));
  m.def("ese0", &ese0);
  m.def("ese1", &ese1);
  m.def("error_profile", &error_profile);
  m.def("ese_of_alpha", &ese_of_alpha, py::arg("profile"), py::arg("alpha"));
  m.def("ese_of_alpha_reduced", &ese_of_alpha_reduced, py::arg("alpha"), py::arg("alpha_star"),
        py::arg("e0"));
  m.def("alpha_star_upper_bounds", [](const Scenario& s) {
    const auto b = alpha_star_upper_bounds(s);
    return py::make_tuple(from_extended(b.bias), from_extended(b.variance));
  });
  m.def("max_ese", &max_ese);
  m.def(
      "alpha_star_from_ratios",
      [](double a, double b) { return alpha_star_from_ratios(to_extended(a), to_extended(b)); },
      py::arg("varxbar_over_bias2"), py::arg("varxbar_over_varybar"));
  m.def("donahue_mse", &donahue_mse, py::arg("n_x"), py::arg("n_y"), py::arg("sigma2"),
        py::arg("mu_e"));

  py::class_<MonteCarloEstimate>(m, "MonteCarloEstimate")
      .def_readonly("mean_sq_error", &MonteCarloEstimate::mean_sq_error)
      .def_readonly("std_error", &MonteCarloEstimate::std_error)
      .def_readonly("trials", &MonteCarloEstimate::trials);

  m.def(
      "estimate_ese",
      [](const DistributionSpec& x, std::uint64_t n_x, const DistributionSpec& y,
         const py::object& n_y, double alpha, std::uint64_t trials, std::uint64_t seed) {
        const SampleSize ny = to_sample_size(n_y);
        py::gil_scoped_release release;
        return estimate_ese(x, n_x, y, ny, alpha, trials, SeedSpec{seed, 0});
      },
      py::arg("x"), py::arg("n_x"), py::arg("y"), py::arg("n_y"), py::arg("alpha"),
      py::arg("trials") = kDefaultTrials, py::arg("seed") = 0);
  m.def(
      "estimate_error_curve",
      [](const DistributionSpec& x, std::uint64_t n_x, const DistributionSpec& y,
         const py::object& n_y, const std::vector<double>& alphas, std::uint64_t trials,
         std::uint64_t seed) {
        const SampleSize ny = to_sample_size(n_y);
        py::gil_scoped_release release;
        return estimate_error_curve(x, n_x, y, ny, alphas, trials, SeedSpec{seed, 0});
      },
      py::arg("x"), py::arg("n_x"), py::arg("y"), py::arg("n_y"), py::arg("alphas"),
      py::arg("trials") = kDefaultTrials, py::arg("seed") = 0);

  m.def(
      "reduce_to_two_agent",
      [](const std::pair<DistributionSpec, std::uint64_t>& focal,
         const std::vector<std::pair<DistributionSpec, std::uint64_t>>& helpers) {
        return reduce_to_two_agent(
            FederationScenario({focal.first, focal.second}, to_sources(helpers)));
      },
      py::arg("focal"), py::arg("helpers"));
  m.def(
      "personalized_weight",
      [](const std::pair<DistributionSpec, std::uint64_t>& focal,
         const std::vector<std::pair<DistributionSpec, std::uint64_t>>& helpers) {
        const auto w = personalized_weight(
            FederationScenario({focal.first, focal.second}, to_sources(helpers)));
        return py::make_tuple(w.alpha_star, w.profile);
      },
      py::arg("focal"), py::arg("helpers"));

  m.def("table1", []() {
    py::list rows;
    for (const auto& r : build_table1()) {
      py::dict d;
      d["bias2_over_varx"] = r.bias2_over_varx.to_string();
      d["n_x"] = r.n_x.to_string();
      d["vary_over_varx"] = r.vary_over_varx.to_string();
      d["ny_over_nx"] = r.ny_over_nx.to_string();
      d["alpha_star"] = r.alpha_star();
      d["e_ratio_opt"] = r.e_ratio_opt();
      d["e_ratio_fifth"] = r.e_ratio_fifth();
      d["e_ratio_half"] = r.e_ratio_half();
      d["printed"] = r.printed;
      d["status"] = to_string(r.status);
      rows.append(d);
    }
    return rows;
  });
}
