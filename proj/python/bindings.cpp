#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "descalg/algebra_b.hpp"
#include "descalg/algebra_d.hpp"
#include "descalg/cli.hpp"
#include "descalg/composition.hpp"
#include "descalg/coxeter_oracle.hpp"
#include "descalg/error.hpp"
#include "descalg/filled_template.hpp"

namespace py = pybind11;
using namespace descalg;

namespace {

CoxeterType coxeter_type(const std::string& s) {
  if (s == "D" || s == "d") return CoxeterType::D;
  if (s == "B" || s == "b") return CoxeterType::B;
  throw ParseError("type must be \"D\" or \"B\"");
}

OracleStrategy strategy(const std::string& s) {
  if (s == "counting") return OracleStrategy::Counting;
  if (s == "convolution") return OracleStrategy::Convolution;
  throw ParseError("strategy must be \"counting\" or \"convolution\"");
}

// Products come back as {index text: coefficient}, in canonical order.
py::dict as_dict(const AlgebraElement& x) {
  py::dict d;
  for (const auto& [b, c] : x.terms()) d[py::str(format_index(b))] = c;
  return d;
}

py::dict as_dict(const BAlgebraElement& x) {
  py::dict d;
  for (const auto& [q, c] : x.terms()) d[py::str(format_composition(q))] = c;
  return d;
}

py::dict template_dict(const FilledTemplate& t, const Composition& word) {
  py::list z, y;
  for (int i = 0; i <= t.rows(); ++i) {
    std::vector<int> row;
    for (int j = 0; j <= t.cols(); ++j) row.push_back(t.z(i, j));
    z.append(row);
  }
  for (int i = 1; i <= t.rows(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= t.cols(); ++j) row.push_back(t.y(i, j));
    y.append(row);
  }
  py::dict d;
  d["z"] = z;
  d["y"] = y;
  d["reading_word"] = std::vector<int>(word.parts().begin(), word.parts().end());
  d["border_sum"] = border_sum(t);
  d["y_sum"] = y_sum(t);
  return d;
}

TableStore& tables() {
  static TableStore store;
  return store;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic in the type D and type B descent algebras";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def(
      "multiply",
      [](const std::string& left, const std::string& right, int n, const std::string& type) {
        if (coxeter_type(type) == CoxeterType::D)
          return as_dict(multiply_basis(parse_index(left, n), parse_index(right, n)));
        return as_dict(multiply_basis_b(parse_composition(left), parse_composition(right), n));
      },
      py::arg("left"), py::arg("right"), py::arg("n"), py::arg("type") = "D");

  m.def(
      "oracle_multiply",
      [](const std::string& left, const std::string& right, int n, const std::string& type,
         const std::string& how) {
        const CoxeterType t = coxeter_type(type);
        const OracleStrategy s = strategy(how);
        const GroupTable& table = tables().get(t, n);
        if (t == CoxeterType::D)
          return as_dict(oracle_multiply(parse_index(left, n), parse_index(right, n), table, s));
        return as_dict(oracle_multiply_b(parse_composition(left), parse_composition(right), table, s));
      },
      py::arg("left"), py::arg("right"), py::arg("n"), py::arg("type") = "D", py::arg("strategy") = "counting");

  m.def(
      "templates",
      [](const std::string& left, const std::string& right, int n, const std::string& type) {
        py::list out;
        if (coxeter_type(type) == CoxeterType::D) {
          const BasisIndex p = parse_index(left, n), q = parse_index(right, n);
          for (const auto& t : enumerate_z_d(p, q)) {
            py::dict d = template_dict(t, reading_word(t));
            d["case"] = std::string(to_string(apply_rule(p, q, t).rule_case));
            out.append(d);
          }
        } else {
          for (const auto& t : enumerate_z_b(parse_composition(left), parse_composition(right), n))
            out.append(template_dict(t, reading_word_b(t)));
        }
        return out;
      },
      py::arg("left"), py::arg("right"), py::arg("n"), py::arg("type") = "D");

  m.def(
      "enumerate_basis",
      [](int n, const std::string& type) {
        std::vector<std::string> out;
        if (coxeter_type(type) == CoxeterType::D)
          for (const auto& b : enumerate_basis(n)) out.push_back(format_index(b));
        else
          for (const auto& q : enumerate_b_basis(n)) out.push_back(format_composition(q));
        return out;
      },
      py::arg("n"), py::arg("type") = "D");

  m.def(
      "normalize_index", [](const std::string& text, int n) { return format_index(parse_index(text, n)); },
      py::arg("text"), py::arg("n"));

  m.def(
      "class_of",
      [](const std::string& text, int n) { return std::string(to_string(parse_index(text, n).class_tag())); },
      py::arg("text"), py::arg("n"));

  m.def(
      "subset_of",
      [](const std::string& text, int n) {
        const GeneratorSet j = subset_of(parse_index(text, n));
        return py::make_tuple(format_generators(j, CoxeterType::D),
                              format_generators(complement(j), CoxeterType::D));
      },
      py::arg("text"), py::arg("n"));

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "descalg");
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
