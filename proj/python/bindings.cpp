#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tidfd/errors.hpp"
#include "tidfd/experiment.hpp"

namespace py = pybind11;
using namespace tidfd;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Signal to_signal(const Array& a) {
  if (a.ndim() != 1) throw InvalidSignal("expected a one-dimensional array");
  return Signal(std::vector<double>(a.data(), a.data() + a.size()));
}

Array to_array(const Signal& f) {
  Array out(static_cast<py::ssize_t>(f.size()));
  std::copy(f.values().begin(), f.values().end(), out.mutable_data());
  return out;
}

struct Pipeline {
  Setup setup;
};

Pipeline make_pipeline(std::size_t n, const std::string& bank) {
  ExperimentConfig c;
  c.n = n;
  c.bank = parse_bank_kind(bank);
  validate(c);
  return {make_setup(c)};
}

FilterSpec filter_named(const std::string& name) {
  if (name == "tikhonov") return tikhonov_filter();
  if (name == "truncation") return truncation_filter();
  throw UnknownKind("filter '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_tidfd, m) {
  m.doc() = "Translation-invariant wavelet-vaguelette reconstruction for periodic integration";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("integrate", [](const Array& f) { return to_array(apply(integration_op(f.size()), to_signal(f))); },
        py::arg("f"), "Periodic antiderivative of a zero-mean signal.");
  m.def("project_admissible", [](const Array& f) { return to_array(project_admissible(to_signal(f))); },
        py::arg("f"));
  m.def("add_white_noise",
        [](const Array& f, double sigma, std::uint64_t seed) {
          return to_array(add_white_noise(to_signal(f), sigma, seed));
        },
        py::arg("f"), py::arg("sigma"), py::arg("seed"));
  m.def("make_phantom",
        [](const std::string& kind, std::size_t n, int band_scale) {
          return to_array(make_phantom(parse_phantom_kind(kind), n, band_scale));
        },
        py::arg("kind"), py::arg("n") = 512, py::arg("band_scale") = 4);
  m.def("frame_bounds",
        [](std::size_t n, const std::string& bank) {
          const FrameBounds b = frame_bounds(make_pipeline(n, bank).setup.u_bank);
          return py::make_tuple(b.lower, b.upper);
        },
        py::arg("n"), py::arg("bank") = "shannon");
  m.def("kappas", [](std::size_t n, const std::string& bank) { return make_pipeline(n, bank).setup.dfd.kappas(); },
        py::arg("n"), py::arg("bank") = "shannon");
  m.def("exact_inverse",
        [](const Array& g, const std::string& bank) {
          const Pipeline p = make_pipeline(g.size(), bank);
          return to_array(exact_inverse(p.setup.dfd, p.setup.w_bank, to_signal(g)));
        },
        py::arg("g"), py::arg("bank") = "shannon");
  m.def("filtered_reconstruct",
        [](const Array& g, double alpha, const std::string& filter, const std::string& bank) {
          const Pipeline p = make_pipeline(g.size(), bank);
          return to_array(
              filtered_reconstruct(p.setup.dfd, p.setup.w_bank, filter_named(filter), alpha, to_signal(g)).reconstruction);
        },
        py::arg("g"), py::arg("alpha"), py::arg("filter") = "tikhonov", py::arg("bank") = "shannon");
  m.def("thresholded_reconstruct",
        [](const Array& g, double beta, const std::string& bank) {
          const Pipeline p = make_pipeline(g.size(), bank);
          return to_array(thresholded_reconstruct(p.setup.dfd, p.setup.w_bank, beta, to_signal(g)));
        },
        py::arg("g"), py::arg("beta"), py::arg("bank") = "shannon");
  m.def("decimated_reconstruct",
        [](const Array& g, double beta) {
          const Pipeline p = make_pipeline(g.size(), "shannon");
          return to_array(decimated_reconstruct(p.setup.dfd, p.setup.w_bank, DecimatedMode::soft(beta), to_signal(g)));
        },
        py::arg("g"), py::arg("beta"));
  m.def("a_priori_alpha", &a_priori_alpha, py::arg("delta"), py::arg("rho"), py::arg("mu"), py::arg("c") = 1.0);
  m.def("tikhonov", [](double alpha, double kappa) { return tikhonov_filter()(alpha, kappa); }, py::arg("alpha"),
        py::arg("kappa"));
  m.def("truncation", [](double alpha, double kappa) { return truncation_filter()(alpha, kappa); }, py::arg("alpha"),
        py::arg("kappa"));
  m.def("soft_threshold", py::overload_cast<double, double>(&soft_threshold), py::arg("t"), py::arg("x"));

  // Experiment runners take a JSON string with ExperimentConfig keys and
  // return the report as a JSON string.
  auto runner = [&m](const char* name, nlohmann::json (*run)(const ExperimentConfig&)) {
    m.def(name, [run](const std::string& config) { return run(parse_config(nlohmann::json::parse(config))).dump(); },
          py::arg("config") = "{}");
  };
  runner("run_reconstruction", run_reconstruction);
  runner("run_rate_study", run_rate_study);
  runner("run_comparison", run_comparison);
  runner("run_validate_frame", run_validate_frame);
  runner("run_validate_filter", run_validate_filter);
  runner("run_probe_optimality", run_probe_optimality);
}
