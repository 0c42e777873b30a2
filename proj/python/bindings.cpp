#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "subnetrel/closed_forms.hpp"
#include "subnetrel/errors.hpp"
#include "subnetrel/limits.hpp"
#include "subnetrel/montecarlo.hpp"
#include "subnetrel/patterns.hpp"
#include "subnetrel/reliability.hpp"
#include "subnetrel/serialization.hpp"

namespace py = pybind11;

namespace {

using namespace subnetrel;

py::object big_to_py(const BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

Composition make_composition(const std::tuple<int, int, int>& c) {
  return Composition{std::get<0>(c), std::get<1>(c), std::get<2>(c)};
}

std::vector<SubnetworkPattern> parse_patterns(const std::vector<std::string>& texts) {
  std::vector<SubnetworkPattern> pats;
  pats.reserve(texts.size());
  for (const auto& text : texts) {
    pats.push_back(pattern_from_string(text));
  }
  return pats;
}

py::list poly_terms(const ReliabilityPolynomial& poly) {
  py::list out;
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    out.append(py::make_tuple(py::make_tuple(it->first.c2, it->first.c3, it->first.c4),
                              exponent_value(it->first, poly.n()), big_to_py(it->second)));
  }
  return out;
}

py::dict report_to_dict(const VerificationReport& report) {
  py::dict doc;
  doc["n"] = report.n;
  doc["composition"] =
      py::make_tuple(report.composition.i, report.composition.j, report.composition.k);
  doc["source"] = report.source;
  doc["aggregate_symmetric"] = report.aggregate_symmetric;
  py::list rows;
  for (const auto& row : report.rows) {
    py::dict r;
    r["exponent"] = row.exponent;
    r["paper"] = big_to_py(row.paper);
    r["oracle"] = big_to_py(row.oracle);
    r["status"] = row.status == RowStatus::kMatch ? "MATCH" : "MISMATCH";
    if (row.ratio) {
      r["ratio"] = big_to_py(*row.ratio);
    }
    rows.append(std::move(r));
  }
  doc["rows"] = std::move(rows);
  doc["status"] = report.summary == RowStatus::kMatch ? "MATCH" : "MISMATCH";
  return doc;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and statistical reliability engine for B_{n-2} subnetworks "
            "of bubble-sort networks";

  m.attr("MIN_N") = kMinN;
  m.attr("MAX_EXPLICIT_N") = kMaxExplicitN;
  m.attr("MAX_SYMBOLIC_N") = kMaxSymbolicN;
  m.attr("RNG_ALGORITHM") = kRngAlgorithm;

  py::register_exception<CapacityError>(m, "CapacityError");

  py::class_<ReliabilityPolynomial>(m, "Polynomial")
      .def_property_readonly("n", &ReliabilityPolynomial::n)
      .def("terms", &poly_terms,
           "list of ((c2, c3, c4), exponent, coefficient) with the largest key first")
      .def("coefficient",
           [](const ReliabilityPolynomial& poly, const std::tuple<int, int, int>& key) {
             return big_to_py(poly.coefficient(
                 ExponentKey{std::get<0>(key), std::get<1>(key), std::get<2>(key)}));
           })
      .def("coefficient_sum",
           [](const ReliabilityPolynomial& poly) { return big_to_py(poly.coefficient_sum()); })
      .def("evaluate", [](const ReliabilityPolynomial& poly, double p) { return evaluate(poly, p); })
      .def("to_json", [](const ReliabilityPolynomial& poly) { return polynomial_to_json(poly); });

  m.def("factorial", [](int k) { return big_to_py(factorial(k)); });
  m.def("binomial", [](int n, int k) { return big_to_py(binomial(n, k)); });

  m.def("list_patterns", [](int n) {
    std::vector<std::string> out;
    for (const auto& pat : enumerate_patterns(n)) {
      out.push_back(to_string(pat));
    }
    return out;
  });

  m.def("union_exponent", [](const std::vector<std::string>& texts, int n) {
    const auto pats = parse_patterns(texts);
    const ExponentKey key = union_exponent(pats, n);
    return py::make_tuple(key.c2, key.c3, key.c4);
  });

  m.def("union_size_explicit", [](const std::vector<std::string>& texts, int n) {
    return union_size_explicit(parse_patterns(texts), n);
  });

  m.def("composition_polynomial", [](int n, const std::tuple<int, int, int>& c) {
    return composition_polynomial(n, make_composition(c));
  });

  m.def("total_polynomial", &total_polynomial);

  m.def("closed_form", [](const std::tuple<int, int, int>& c, int n) {
    return closed_form(make_composition(c), n);
  });

  m.def(
      "verify",
      [](const std::tuple<int, int, int>& c, int n, bool aggregate_symmetric) {
        return report_to_dict(verify(make_composition(c), n, aggregate_symmetric));
      },
      py::arg("composition"), py::arg("n"), py::arg("aggregate_symmetric") = false);

  m.def("cross_check_another_way", &cross_check_another_way);

  m.def(
      "monte_carlo",
      [](int n, double p, const std::tuple<int, int, int>& c, std::int64_t trials,
         std::uint64_t seed) {
        const SimulationResult result = monte_carlo(n, p, make_composition(c), trials, seed);
        py::dict doc;
        doc["mean"] = result.mean;
        doc["stderr"] = result.std_error;
        doc["trials"] = result.trials;
        doc["seed"] = result.seed;
        doc["rng"] = kRngAlgorithm;
        return doc;
      },
      py::arg("n"), py::arg("p"), py::arg("composition"), py::arg("trials"), py::arg("seed"));
}
