#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sylvsum/double_sum.hpp"
#include "sylvsum/errors.hpp"
#include "sylvsum/json_io.hpp"
#include "sylvsum/subres.hpp"
#include "sylvsum/verify.hpp"

namespace py = pybind11;
using namespace sylvsum;

namespace {

// Anything whose str() is "n" or "n/d": int, str, fractions.Fraction.
std::vector<Rational> to_rationals(const py::iterable& items) {
  std::vector<Rational> out;
  for (const auto& item : items) {
    out.push_back(Rational::parse(py::str(item).cast<std::string>()));
  }
  return out;
}

std::vector<std::string> to_strings(const Poly& poly) {
  std::vector<std::string> out;
  for (const auto& c : poly.coeffs()) {
    out.push_back(c.to_string());
  }
  return out;
}

Poly to_poly(const py::iterable& coeffs) { return Poly(to_rationals(coeffs)); }
RootList to_roots(const py::iterable& roots) { return RootList(to_rationals(roots)); }

py::list reports_to_python(const std::vector<CheckReport>& reports) {
  auto loads = py::module_::import("json").attr("loads");
  py::list out;
  for (const auto& r : reports) {
    out.append(loads(to_json(r).dump()));
  }
  return out;
}

SweepOptions options(int bound, bool deterministic, unsigned workers) {
  SweepOptions o;
  o.bound = bound;
  o.deterministic = deterministic;
  o.workers = workers;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Sylvester double sums, subresultants and cofactors.";

  py::register_exception<MathError>(m, "MathError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("poly_from_roots", [](const py::iterable& roots) { return to_strings(poly_from_roots(to_rationals(roots))); },
        py::arg("roots"), "Ascending coefficients of prod (x - r).");
  m.def("poly_eval",
        [](const py::iterable& coeffs, const py::object& x0) {
          return to_poly(coeffs).eval(Rational::parse(py::str(x0).cast<std::string>())).to_string();
        },
        py::arg("coeffs"), py::arg("x0"));

  m.def("r_product",
        [](const py::iterable& ys, const py::iterable& zs) {
          return r_product(to_rationals(ys), to_rationals(zs)).to_string();
        },
        py::arg("ys"), py::arg("zs"));
  m.def("sylvester_double_sum",
        [](const py::iterable& a, const py::iterable& b, int p, int q) {
          return to_strings(sylvester_double_sum(to_roots(a), to_roots(b), p, q));
        },
        py::arg("A"), py::arg("B"), py::arg("p"), py::arg("q"));
  m.def("expected_sylv",
        [](const py::iterable& a, const py::iterable& b, int p, int q) {
          return to_strings(expected_sylv(to_roots(a), to_roots(b), p, q));
        },
        py::arg("A"), py::arg("B"), py::arg("p"), py::arg("q"));

  m.def("subresultant",
        [](const py::iterable& f, const py::iterable& g, int k) {
          return to_strings(subresultant(to_poly(f), to_poly(g), k));
        },
        py::arg("f"), py::arg("g"), py::arg("k"));
  m.def("cofactors",
        [](const py::iterable& f, const py::iterable& g, int k) {
          const Poly fp = to_poly(f);
          const Poly gp = to_poly(g);
          const auto [F, G] = cofactors(fp, gp, k);
          py::dict out;
          out["F"] = to_strings(F);
          out["G"] = to_strings(G);
          out["recombined"] = to_strings(F * fp + G * gp);
          return out;
        },
        py::arg("f"), py::arg("g"), py::arg("k"));
  m.def("resultant",
        [](const py::iterable& f, const py::iterable& g) { return resultant(to_poly(f), to_poly(g)).to_string(); },
        py::arg("f"), py::arg("g"));
  m.def("principal_coeff",
        [](const py::iterable& f, const py::iterable& g, int k) {
          return principal_coeff(to_poly(f), to_poly(g), k).to_string();
        },
        py::arg("f"), py::arg("g"), py::arg("k"));

  m.def("binomial",
        [](long n, long k) { return py::int_(py::str(binomial(n, k).get_str())); },
        py::arg("n"), py::arg("k"));
  m.def("classify_case",
        [](int mm, int n, int p, int q) {
          return std::string(to_string(classify_case(SylvParams::make(mm, n, p, q))));
        },
        py::arg("m"), py::arg("n"), py::arg("p"), py::arg("q"));

  m.def("verify_theorem_sweep",
        [](int mm, int n, std::uint64_t seed, int trials, int bound, bool deterministic, unsigned workers) {
          std::vector<CheckReport> reports;
          {
            py::gil_scoped_release release;
            reports = verify_theorem_sweep(mm, n, seed, trials, options(bound, deterministic, workers));
          }
          return reports_to_python(reports);
        },
        py::arg("m"), py::arg("n"), py::arg("seed") = 0, py::arg("trials") = 3, py::arg("bound") = 20,
        py::arg("deterministic") = false, py::arg("workers") = 1);
  m.def("verify_suite",
        [](const std::string& suite, int mm, int n, std::uint64_t seed, int trials, int bound, bool deterministic,
           unsigned workers) {
          const auto parsed = parse_suite(suite);
          if (!parsed) {
            throw py::value_error("unknown suite '" + suite + "'");
          }
          std::vector<CheckReport> reports;
          {
            py::gil_scoped_release release;
            reports = verify_suite(*parsed, mm, n, seed, trials, options(bound, deterministic, workers));
          }
          return reports_to_python(reports);
        },
        py::arg("suite"), py::arg("m"), py::arg("n"), py::arg("seed") = 0, py::arg("trials") = 3,
        py::arg("bound") = 20, py::arg("deterministic") = false, py::arg("workers") = 1);
}
