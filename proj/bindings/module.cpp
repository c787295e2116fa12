#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "indroots/certify.hpp"
#include "indroots/constructions.hpp"
#include "indroots/exprparse.hpp"
#include "indroots/indpoly.hpp"
#include "indroots/json_io.hpp"
#include "indroots/scan.hpp"

namespace py = pybind11;
using namespace indroots;

namespace {

GraphExpr expr_from_text(const std::string& text) { return parse_expr(text); }

GraphExpr expr_from_g6(const std::string& line) {
  return GraphExpr::leaf(parse_graph6(line));
}

std::vector<std::string> poly_strings(const IntPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

std::string certify_json(const GraphExpr& e) {
  return certificate_to_json(certify_imaginary(e.poly())).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact independence polynomials and purely imaginary root certification";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_ValueError);
  py::register_exception<Error>(m, "IndrootsError", PyExc_RuntimeError);

  m.def("poly_g6", [](const std::string& g6) { return poly_strings(expr_from_g6(g6).poly()); },
        py::arg("g6"), "independence polynomial coefficients of a graph6 line");
  m.def("poly_expr",
        [](const std::string& text) { return poly_strings(expr_from_text(text).poly()); },
        py::arg("expr"), "independence polynomial coefficients of a graph expression");
  m.def("order_expr",
        [](const std::string& text) { return expr_from_text(text).order().get_str(); },
        py::arg("expr"));
  m.def("alpha_expr", [](const std::string& text) { return expr_from_text(text).alpha(); },
        py::arg("expr"));

  m.def("certify_g6", [](const std::string& g6) { return certify_json(expr_from_g6(g6)); },
        py::arg("g6"), "imaginary-root certificate as a JSON string");
  m.def("certify_expr",
        [](const std::string& text) { return certify_json(expr_from_text(text)); },
        py::arg("expr"));

  m.def("graph6_roundtrip",
        [](const std::string& g6) { return write_graph6(parse_graph6(g6)); }, py::arg("g6"));
  m.def("realize_graph6",
        [](const std::string& text) { return write_graph6(realize(expr_from_text(text))); },
        py::arg("expr"), "concrete graph6 form of an expression (within the order cap)");

  m.def("dioph",
        [](unsigned n) {
          DiophPair p = dioph(n);
          return py::make_tuple(p.x.get_str(), p.y.get_str());
        },
        py::arg("n"));

  m.def("construct_gabcd",
        [](unsigned n) {
          GabcdParams p = gabcd_params(n);
          std::map<std::string, std::string> params = {{"n", std::to_string(n)},
                                                       {"a", p.a.get_str()},
                                                       {"b", p.b.get_str()},
                                                       {"c", p.c.get_str()},
                                                       {"d", p.d.get_str()}};
          return construction_to_json("gabcd", params, build_gabcd(p.a, p.b, p.c, p.d),
                                      BigRat(1))
              .dump();
        },
        py::arg("n") = 1);
  m.def("construct_seed",
        [](int alpha) {
          SeedRecord record = seed(alpha);
          std::map<std::string, std::string> params = {{"alpha", std::to_string(alpha)},
                                                       {"d", record.d.get_str()},
                                                       {"seed", record.seed.to_string()}};
          GraphExpr joined =
              GraphExpr::join_of({record.seed, GraphExpr::complete_n(record.d)});
          return construction_to_json("seed", params, joined, BigRat(1)).dump();
        },
        py::arg("alpha"));
  m.def("construct_alpha",
        [](unsigned alpha) {
          std::map<std::string, std::string> params = {{"alpha", std::to_string(alpha)}};
          return construction_to_json("alpha", params, graph_with_alpha(alpha), BigRat(1))
              .dump();
        },
        py::arg("alpha"));
  m.def("construct_corona",
        [](const std::string& g6) {
          Graph g = parse_graph6(g6);
          CoronaConstruction built = corona_construction(g);
          std::map<std::string, std::string> params = {{"base", g6}, {"m", built.m.get_str()}};
          return construction_to_json("corona", params, built.expr, BigRat(1)).dump();
        },
        py::arg("g6"));
  m.def("construct_embed",
        [](const std::string& g6, long k) {
          Graph g = parse_graph6(g6);
          EmbedCertificate cert = embed_with_imaginary_roots(g, k);
          std::map<std::string, std::string> params = {
              {"base", g6}, {"k", std::to_string(k)}, {"m", cert.m.get_str()}};
          nlohmann::json out = construction_to_json("embed", params, cert.expr, cert.root_im);
          nlohmann::json witness = nlohmann::json::array();
          for (const auto& v : cert.witness) witness.push_back(v.get_str());
          out["witness"] = std::move(witness);
          out["total_order"] = cert.total_order.get_str();
          return out.dump();
        },
        py::arg("g6"), py::arg("k") = 1);

  m.def("scan_file",
        [](const std::string& path, unsigned jobs, bool lenient, int max_order) {
          ScanOptions options;
          options.jobs = jobs;
          options.lenient = lenient;
          options.max_order = max_order;
          ScanReport report;
          {
            py::gil_scoped_release release;
            report = scan_file(path, options);
          }
          return scan_report_to_json(report).dump();
        },
        py::arg("path"), py::arg("jobs") = 1, py::arg("lenient") = false,
        py::arg("max_order") = 60);
}
