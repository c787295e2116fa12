// indroots: exact independence polynomials, purely imaginary root
// certification, graph family construction, and graph6 corpus scanning.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "indroots/certify.hpp"
#include "indroots/constructions.hpp"
#include "indroots/exprparse.hpp"
#include "indroots/indpoly.hpp"
#include "indroots/json_io.hpp"
#include "indroots/scan.hpp"

namespace {

using namespace indroots;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitFlagged = 3;

GraphExpr expr_from_flags(const std::string& g6, const std::string& expr_text) {
  if (!g6.empty()) return GraphExpr::leaf(parse_graph6(g6));
  return parse_expr(expr_text);
}

int run_poly(const std::string& g6, const std::string& expr_text) {
  GraphExpr e = expr_from_flags(g6, expr_text);
  nlohmann::json out{{"order", e.order().get_str()},
                     {"alpha", e.alpha()},
                     {"poly", poly_to_json(e.poly())}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_certify(const std::string& g6, const std::string& expr_text) {
  GraphExpr e = expr_from_flags(g6, expr_text);
  ImaginaryRootCertificate cert = certify_imaginary(e.poly());
  std::cout << certificate_to_json(cert).dump(2) << "\n";
  return cert.verdict == Verdict::exists ? kExitFlagged : kExitOk;
}

int run_construct(const std::string& family, unsigned n, unsigned alpha_value, long k,
                  const std::string& g6) {
  std::map<std::string, std::string> params;
  if (family == "gabcd") {
    GabcdParams p = gabcd_params(n);
    params = {{"n", std::to_string(n)},
              {"a", p.a.get_str()},
              {"b", p.b.get_str()},
              {"c", p.c.get_str()},
              {"d", p.d.get_str()}};
    GraphExpr e = build_gabcd(p.a, p.b, p.c, p.d);
    std::cout << construction_to_json("gabcd", params, e, BigRat(1)).dump(2) << "\n";
    return kExitOk;
  }
  if (family == "seed") {
    SeedRecord record = seed(static_cast<int>(alpha_value));
    params = {{"alpha", std::to_string(record.alpha)},
              {"d", record.d.get_str()},
              {"seed", record.seed.to_string()}};
    GraphExpr joined = GraphExpr::join_of({record.seed, GraphExpr::complete_n(record.d)});
    std::cout << construction_to_json("seed", params, joined, BigRat(1)).dump(2) << "\n";
    return kExitOk;
  }
  if (family == "alpha") {
    params = {{"alpha", std::to_string(alpha_value)}};
    GraphExpr e = graph_with_alpha(alpha_value);
    std::cout << construction_to_json("alpha", params, e, BigRat(1)).dump(2) << "\n";
    return kExitOk;
  }
  if (family == "corona") {
    if (g6.empty()) throw Error("construct --family corona needs --g6");
    Graph g = parse_graph6(g6);
    CoronaConstruction built = corona_construction(g);
    params = {{"base", g6}, {"m", built.m.get_str()}};
    std::cout << construction_to_json("corona", params, built.expr, BigRat(1)).dump(2)
              << "\n";
    return kExitOk;
  }
  if (family == "embed") {
    if (g6.empty()) throw Error("construct --family embed needs --g6");
    Graph g = parse_graph6(g6);
    EmbedCertificate cert = embed_with_imaginary_roots(g, k);
    params = {{"base", g6}, {"k", std::to_string(k)}, {"m", cert.m.get_str()}};
    nlohmann::json out = construction_to_json("embed", params, cert.expr, cert.root_im);
    nlohmann::json witness = nlohmann::json::array();
    for (const auto& v : cert.witness) witness.push_back(v.get_str());
    out["witness"] = std::move(witness);
    out["total_order"] = cert.total_order.get_str();
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  throw Error("unknown construction family: " + family);
}

int run_dioph(unsigned n) {
  DiophPair p = dioph(n);
  std::cout << "(" << p.x.get_str() << ", " << p.y.get_str() << ")\n";
  return kExitOk;
}

int run_scan(const std::string& path, unsigned jobs, bool lenient, int max_order) {
  ScanOptions options;
  options.jobs = jobs;
  options.lenient = lenient;
  options.max_order = max_order;
  ScanReport report = scan_file(path, options);
  std::cout << scan_report_to_json(report).dump(2) << "\n";
  std::fprintf(stderr,
               "scanned %zu lines (max order %d) in %.2fs with %u worker(s): "
               "%zu flagged, %zu skipped\n",
               report.input_count, report.max_order_seen, report.elapsed_seconds, jobs,
               report.flagged.size(), report.skipped.size());
  return report.flagged.empty() ? kExitOk : kExitFlagged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact independence polynomials and purely imaginary root certification"};
  app.require_subcommand(1);

  std::string g6, expr_text;
  auto add_input_flags = [&](CLI::App* cmd) {
    auto* opt_g6 = cmd->add_option("--g6", g6, "graph6 line");
    auto* opt_expr = cmd->add_option("--expr", expr_text, "graph expression");
    opt_g6->excludes(opt_expr);
    opt_expr->excludes(opt_g6);
  };

  CLI::App* poly = app.add_subcommand("poly", "independence polynomial of a graph");
  add_input_flags(poly);

  CLI::App* certify = app.add_subcommand("certify", "certify purely imaginary roots");
  add_input_flags(certify);

  CLI::App* construct = app.add_subcommand("construct", "generate a root-bearing family");
  std::string family;
  unsigned family_n = 1;
  unsigned family_alpha = 4;
  long family_k = 1;
  std::string family_g6;
  construct->add_option("--family", family, "gabcd|seed|alpha|corona|embed")->required();
  construct->add_option("--n", family_n, "family index (gabcd)");
  construct->add_option("--alpha", family_alpha, "independence number (seed, alpha)");
  construct->add_option("--k", family_k, "root scale (embed)");
  construct->add_option("--g6", family_g6, "base graph (corona, embed)");

  CLI::App* dioph_cmd = app.add_subcommand("dioph", "recurrence pair (x_n, y_n)");
  unsigned dioph_n = 1;
  dioph_cmd->add_option("n", dioph_n, "index")->required();

  CLI::App* scan = app.add_subcommand("scan", "scan a graph6 corpus");
  std::string scan_path;
  unsigned scan_jobs = 1;
  bool scan_lenient = false;
  int scan_max_order = 60;
  scan->add_option("file", scan_path, "graph6 corpus file")->required();
  scan->add_option("--jobs", scan_jobs, "worker count");
  scan->add_flag("--lenient", scan_lenient, "skip malformed lines instead of aborting");
  scan->add_option("--max-order", scan_max_order, "largest graph order accepted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (poly->parsed()) {
      if (g6.empty() && expr_text.empty()) throw Error("poly needs --g6 or --expr");
      return run_poly(g6, expr_text);
    }
    if (certify->parsed()) {
      if (g6.empty() && expr_text.empty()) throw Error("certify needs --g6 or --expr");
      return run_certify(g6, expr_text);
    }
    if (construct->parsed()) {
      return run_construct(family, family_n, family_alpha, family_k, family_g6);
    }
    if (dioph_cmd->parsed()) return run_dioph(dioph_n);
    if (scan->parsed()) return run_scan(scan_path, scan_jobs, scan_lenient, scan_max_order);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
