#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyvf/errors.hpp"
#include "polyvf/pipelines.hpp"

namespace py = pybind11;
using namespace polyvf;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with polynomial vector fields and their tensor-field modules.";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<SearchFailure>(m, "SearchFailure", PyExc_RuntimeError);
  py::register_exception<Inconclusive>(m, "Inconclusive", PyExc_RuntimeError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);

  py::class_<Report>(m, "Report")
      .def_property_readonly("json", [](const Report& r) { return r.json.dump(); })
      .def_readonly("verified", &Report::verified);

  m.def("phi", [](std::size_t r, const std::string& lambda, const std::string& mu, std::size_t max_r) {
    return run_phi(make_descriptor(r, lambda, mu), max_r);
  }, py::arg("r"), py::arg("lam"), py::arg("mu"), py::arg("max_r") = 5);

  m.def("shift", [](std::size_t r, const std::string& lambda, const std::string& mu, int bound, int cutoff) {
    py::gil_scoped_release release;
    return run_shift(make_descriptor(r, lambda, mu), bound, cutoff);
  }, py::arg("r"), py::arg("lam"), py::arg("mu"), py::arg("bound") = 10, py::arg("cutoff") = 8);

  m.def("span", [](std::size_t r, const std::string& lambda, const std::string& mu, int cutoff, int bound, int d,
                   const std::string& generators) {
    auto desc = make_descriptor(r, lambda, mu);
    std::optional<std::vector<Exponent>> given;
    if (!generators.empty()) given = parse_exponents(generators, r);
    py::gil_scoped_release release;
    return run_span(desc, cutoff, bound, d, given);
  }, py::arg("r"), py::arg("lam"), py::arg("mu"), py::arg("cutoff") = 8, py::arg("bound") = 10, py::arg("d") = 1,
     py::arg("generators") = "");

  m.def("hilbert", [](std::size_t r, const std::string& lambda, const std::string& mu, int cutoff, int bound, int window) {
    py::gil_scoped_release release;
    return run_hilbert(make_descriptor(r, lambda, mu), cutoff, bound, window);
  }, py::arg("r"), py::arg("lam"), py::arg("mu"), py::arg("cutoff") = 8, py::arg("bound") = 10, py::arg("window") = 24);

  m.def("homology", [](const std::string& algebra, const std::string& coeffs, int pmax, int wmax, unsigned jobs,
                       std::size_t max_slice) {
    HomologyOptions opts;
    opts.jobs = jobs;
    opts.max_slice_dim = max_slice;
    py::gil_scoped_release release;
    auto table = homology_table(AlgebraDescriptor::parse(algebra), Coefficients::parse(coeffs), pmax, wmax, opts);
    return std::make_pair(run_homology(table), table.to_csv());
  }, py::arg("algebra"), py::arg("coeffs") = "trivial", py::arg("pmax") = 2, py::arg("wmax") = 10, py::arg("jobs") = 1,
     py::arg("max_slice") = 20000);

  m.def("weights", [](const std::string& partition, std::size_t n, int wmax) {
    return run_weights(parse_partition(partition), n, wmax);
  }, py::arg("partition"), py::arg("n"), py::arg("wmax") = 6);

  m.def("specht", [](const std::string& generators, int cutoff, int check_subs) {
    Json input;
    try {
      input = Json::parse(generators);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("cannot parse generators: ") + e.what());
    }
    py::gil_scoped_release release;
    return run_specht(input, cutoff, check_subs);
  }, py::arg("generators"), py::arg("cutoff") = 10, py::arg("check_subs") = 0);

}
