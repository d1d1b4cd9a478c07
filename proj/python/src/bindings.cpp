#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <sstream>

#include "floerkit/chern_series.hpp"
#include "floerkit/cli.hpp"
#include "floerkit/errors.hpp"
#include "floerkit/floer_tables.hpp"
#include "floerkit/groebner.hpp"
#include "floerkit/lefschetz.hpp"
#include "floerkit/mumford.hpp"
#include "floerkit/rep_variety.hpp"

namespace py = pybind11;
using namespace floerkit;

namespace {

py::dict eigen_dict(const Eigenvalue& e) {
  py::dict d;
  d["value"] = e.value;
  d["exact"] = e.exact.has_value();
  d["alg_mult"] = e.alg_mult;
  d["geo_mult"] = e.geo_mult;
  return d;
}

py::dict quotient_dict(const CommIdeal& ideal) {
  auto q = groebner(ideal);
  py::dict d;
  py::list basis;
  for (const auto& p : q.groebner_basis()) basis.append(to_text(p));
  d["groebner_basis"] = basis;
  d["finite"] = q.is_finite();
  if (q.is_finite()) {
    d["dimension"] = q.dimension();
    py::list spec;
    for (const auto& e : alpha_spectrum(q)) spec.append(eigen_dict(e));
    d["alpha_spectrum"] = spec;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_floerkit, m) {
  m.doc() = "Exact algebra and numerics for surface-operator spectra";

  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<convergence_error>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def("xi", [](int k, int n) { return to_text(xi(k, n)); }, py::arg("k"), py::arg("n"));
  m.def(
      "mumford_relation",
      [](int g, int n) {
        auto r = mumford_relation(g, n);
        py::dict d;
        d["g"] = r.g;
        d["n"] = r.n;
        d["m"] = r.m;
        d["degree"] = r.degree;
        d["polynomial"] = to_text(r.normalized);
        d["pretty"] = to_pretty(r.normalized);
        return d;
      },
      py::arg("g"), py::arg("n"));
  m.def(
      "closed_form_oracle",
      [](int k, int n, int samples, std::uint64_t seed, double t) {
        auto r = closed_form_oracle(k, n, samples, seed, t);
        return py::make_tuple(r.max_residual, r.tail_estimate);
      },
      py::arg("k"), py::arg("n"), py::arg("samples") = 20, py::arg("seed") = 0, py::arg("t") = 0.05);
  m.def("ode_residual", [](int k, int n) { return ode_residual(k, n).nonzero_coefficients; },
        py::arg("max_k"), py::arg("n"));

  m.def(
      "r1_closed_form_check",
      [](int g, int mm, int order, int samples, std::uint64_t seed) {
        auto r = r1_closed_form_check(g, mm, order, samples, seed);
        py::dict d;
        d["rank"] = r.rank;
        d["max_residual"] = r.max_residual;
        d["tail_estimate"] = r.tail_estimate;
        return d;
      },
      py::arg("g"), py::arg("m"), py::arg("order"), py::arg("samples") = 20, py::arg("seed") = 0);

  m.def("primitive_dimension", &primitive_dimension, py::arg("g"), py::arg("k"));

  m.def(
      "model_quotient",
      [](const std::string& model, int g, int n, const std::string& signs) {
        auto lambda = LambdaSequence::parse(signs);
        if (model == "q") return quotient_dict(model_q_ideal(g, n, lambda));
        if (model == "top") return quotient_dict(model_top_ideal(g, n, lambda));
        if (model == "max") return quotient_dict(maximal_ideal(n));
        throw precondition_error("model must be q, top or max");
      },
      py::arg("model"), py::arg("g"), py::arg("n"), py::arg("lambda_signs") = "alternating");
  m.def(
      "quotient",
      [](const std::string& text, int n, const std::string& order) {
        auto o = order == "lex" ? MonomialOrder::lex : MonomialOrder::grevlex;
        return quotient_dict(parse_ideal(GeneratorTable::subring(n), text, o));
      },
      py::arg("ideal"), py::arg("n"), py::arg("order") = "grevlex");

  m.def(
      "solve_rep_variety",
      [](int g, int n, int eps, std::uint64_t seed) {
        auto r = solve(g, n, eps, seed).report;
        py::dict d;
        d["residual"] = r.residual;
        d["restarts"] = r.restarts;
        d["jacobian_rank"] = r.jacobian_rank;
        d["quotient_dim"] = r.quotient_dim;
        d["traces"] = r.traces;
        return d;
      },
      py::arg("g"), py::arg("n"), py::arg("eps") = 1, py::arg("seed") = 0);
  m.def("expected_quotient_dim", &expected_quotient_dim, py::arg("g"), py::arg("n"));

  m.def(
      "spectrum",
      [](const std::string& space, int g, int n) {
        py::list rows;
        for (const auto& e : spectrum(parse_space(space), g, n).entries)
          rows.append(py::make_tuple(e.eigenvalue, e.multiplicity));
        return rows;
      },
      py::arg("space"), py::arg("g"), py::arg("n"));
  m.def("ahi_product", &ahi_product, py::arg("n"));
  m.def(
      "thurston_bound",
      [](const std::vector<std::pair<int, int>>& surfaces) {
        std::vector<MeridionalSurface> s;
        for (auto [g, n] : surfaces) s.push_back({g, n});
        return thurston_bound(s).bound;
      },
      py::arg("surfaces"));

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "floerkit");
        std::vector<const char*> argv;
        for (auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
