// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Corpora are generated once into --corpus-dir (default .)
// and reused on later runs.

#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "indroots/certify.hpp"
#include "indroots/constructions.hpp"
#include "indroots/exprparse.hpp"
#include "indroots/indpoly.hpp"
#include "indroots/json_io.hpp"
#include "indroots/scan.hpp"
#include "support/small_graph_gen.hpp"

using namespace indroots;
namespace ts = indroots::testsupport;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

IntPoly from_ints(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

IntPoly one_plus(long a) { return from_ints({1, a}); }

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph fig_tree_14() {
  return Graph::from_edges(14, {{0, 7},
                                {0, 13},
                                {13, 1},
                                {13, 2},
                                {13, 3},
                                {13, 4},
                                {1, 8},
                                {2, 9},
                                {3, 10},
                                {4, 11},
                                {4, 12},
                                {11, 5},
                                {12, 6}});
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open corpus file " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::string g_corpus_dir = ".";

// 1. Seed table golden suite: printed polynomials and exact vanishing of
// I(seed + K_d) at i for every alpha in 5..11.
void criterion_seed_table() {
  struct Row {
    int alpha;
    long d;
    IntPoly printed;
  };
  std::vector<Row> rows;
  rows.push_back({5, 20, one_plus(2) * one_plus(3) * one_plus(1).pow(3)});
  rows.push_back({6, 8, one_plus(1).pow(6)});
  rows.push_back({7, 10,
                  one_plus(1).pow(3) + one_plus(1).pow(5) + one_plus(1).pow(7) -
                      IntPoly::constant(2)});
  rows.push_back({8, 128,
                  one_plus(1).pow(8) + BigInt(16) * one_plus(1).pow(6) -
                      IntPoly::constant(16)});
  rows.push_back({9, 112,
                  one_plus(1).pow(9) + BigInt(16) * one_plus(1).pow(6) -
                      IntPoly::constant(16)});
  rows.push_back({10, 5000, one_plus(2).pow(4) * one_plus(3).pow(4) * one_plus(1).pow(2)});
  rows.push_back({11, 2000, one_plus(2).pow(3) * one_plus(3).pow(3) * one_plus(1).pow(5)});
  for (const auto& row : rows) {
    SeedRecord record = seed(row.alpha);
    require(record.d == row.d, "seed d mismatch at alpha " + std::to_string(row.alpha));
    require(record.seed.poly() == row.printed,
            "seed polynomial mismatch at alpha " + std::to_string(row.alpha));
    GraphExpr joined =
        GraphExpr::join_of({record.seed, GraphExpr::complete_n(record.d)});
    require(joined.poly().eval_gauss(GaussRat::unit_i()).is_zero(),
            "seed + K_d does not vanish at i for alpha " + std::to_string(row.alpha));
  }
}

// 2. Family parameter sweep n = 1..50: both defining equations hold exactly
// and the family polynomial vanishes at i.
void criterion_family_sweep() {
  for (unsigned n = 1; n <= 50; ++n) {
    GabcdParams p = gabcd_params(n);
    require(p.a * p.a * p.a * p.a - 6 * p.a * p.a - 3 * p.b * p.b == 0,
            "first parameter equation fails at n = " + std::to_string(n));
    require(-4 * p.a * p.a * p.a + 4 * p.a - p.b * p.b * p.b + 3 * p.b + 2 + p.d == 0,
            "second parameter equation fails at n = " + std::to_string(n));
    GraphExpr g = build_gabcd(p.a, p.b, p.c, p.d);
    require(g.poly().eval_gauss(GaussRat::unit_i()).is_zero(),
            "family polynomial does not vanish at i for n = " + std::to_string(n));
    require(g.alpha() == 4, "family alpha must be 4");
  }
}

// 3. Recurrence identity sweep n <= 200.
void criterion_recurrence_sweep() {
  for (unsigned n = 1; n <= 200; ++n) {
    DiophPair p = dioph(n);
    require(p.x * p.x - 3 * p.y * p.y == -2,
            "x^2 - 3y^2 = -2 fails at n = " + std::to_string(n));
  }
  for (unsigned n = 3; n <= 200; ++n) {
    DiophPair a = dioph(n - 1);
    DiophPair b = dioph(n - 2);
    require(a.x * b.x - 3 * a.y * b.y == -4,
            "cross identity fails at n = " + std::to_string(n));
  }
}

// 4. Composition formulas against the subset-enumeration oracle on 200
// random pairs with orders <= 5.
void criterion_composition_oracle() {
  std::mt19937 rng(20250607);
  std::uniform_int_distribution<int> outer(0, 5);
  std::uniform_int_distribution<int> inner(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = ts::random_graph(rng, outer(rng));
    Graph h = ts::random_graph(rng, inner(rng));
    GraphExpr ge = GraphExpr::leaf(g);
    GraphExpr he = GraphExpr::leaf(h);
    require(GraphExpr::union_of({ge, he}).poly() == ind_poly_oracle(union_g(g, h)),
            "union formula deviates from the oracle");
    require(GraphExpr::join_of({ge, he}).poly() == ind_poly_oracle(join_g(g, h)),
            "join formula deviates from the oracle");
    require(GraphExpr::lex(ge, he).poly() == ind_poly_oracle(lex_g(g, h)),
            "lex formula deviates from the oracle");
    require(GraphExpr::corona(ge, he).poly() == ind_poly_oracle(corona_g(g, h)),
            "corona formula deviates from the oracle");
  }
}

// 5. Exhaustive orders 1..7: 1252 graphs total (1044 at order 7), every
// verdict none, and the alpha <= 3 subset also clean.
void criterion_exhaustive_small() {
  std::size_t total = 0;
  std::size_t alpha_le_3 = 0;
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::string> lines = read_lines(ts::ensure_corpus_file(n, g_corpus_dir));
    if (n == 7) {
      require(lines.size() == 1044, "order-7 corpus must hold 1044 graphs");
    }
    total += lines.size();
    for (const auto& line : lines) {
      Graph g = parse_graph6(line);
      IntPoly p = ind_poly(g);
      ImaginaryRootCertificate cert = certify_imaginary(p);
      require(cert.verdict == Verdict::none, "purely imaginary root flagged below order 8");
      if (p.degree() <= 3) {
        ++alpha_le_3;
        require(assert_alpha_le_3_clean(p), "alpha <= 3 graph certified unclean");
      }
    }
  }
  require(total == 1252, "orders 1..7 must hold 1252 graphs, saw " + std::to_string(total));
  require(alpha_le_3 > 0, "no alpha <= 3 graphs seen");
}

// 6. Exhaustive orders 8 and 9: published counts, nothing flagged.
void criterion_exhaustive_desk_scale() {
  std::vector<std::string> order8 = read_lines(ts::ensure_corpus_file(8, g_corpus_dir));
  require(order8.size() == 12346, "order-8 corpus must hold 12346 graphs");
  ScanReport r8 = scan_lines(order8, ScanOptions{});
  require(r8.input_count == 12346, "order-8 scan count mismatch");
  require(r8.flagged.empty(), "order-8 scan flagged a graph");

  std::vector<std::string> order9 = read_lines(ts::ensure_corpus_file(9, g_corpus_dir));
  require(order9.size() == 274668, "order-9 corpus must hold 274668 graphs");
  ScanReport r9 = scan_lines(order9, ScanOptions{});
  require(r9.input_count == 274668, "order-9 scan count mismatch");
  require(r9.flagged.empty(), "order-9 scan flagged a graph");
}

// 7. The order-14 witness through the full scan pipeline.
void criterion_witness() {
  std::string line = write_graph6(join_g(Graph::empty_graph(6), Graph::complete(8)));
  ScanReport report = scan_lines({line}, ScanOptions{});
  require(report.flagged.size() == 1, "witness not flagged");
  const ImaginaryRootCertificate& cert = report.flagged[0].certificate;
  require(cert.verdict == Verdict::exists, "witness verdict wrong");
  require(cert.rational_imaginary_roots == std::vector<BigRat>{BigRat(1)},
          "witness roots must be exactly {i, -i}");
  ResidueProfile profile = residue_profile(ind_poly(parse_graph6(line)));
  require(profile.c0 == 16 && profile.c1 == 20 && profile.c2 == 16 && profile.c3 == 20,
          "witness residue profile must be (16,20,16,20)");
  require(profile_balanced(profile), "witness residue profile must balance");
}

// 8. Embedding the 14-vertex tree: total order 1509397, exact root at i.
void criterion_tree_embedding() {
  EmbedCertificate cert = embed_with_imaginary_roots(fig_tree_14(), 1);
  require(cert.total_order == 1509397,
          "tree embedding order is " + cert.total_order.get_str());
  require(cert.evaluation.is_zero(), "tree embedding does not vanish");
  require(cert.root_im == 1, "tree embedding root must be i");
}

// 9. 50 constructed graphs across families and scales k <= 7: rational
// imaginary roots all have numerator 1 and scaling yields exactly {1/k}.
void criterion_rational_classification() {
  int checked = 0;
  auto check_scaled = [&](const GraphExpr& base, long k) {
    GraphExpr scaled = scale_root(base, k);
    std::vector<BigRat> roots = rational_imaginary_classification(scaled.poly());
    require(roots.size() == 1, "classification must contain exactly one scale");
    require(roots[0] == make_rat(BigInt(1), BigInt(k)),
            "classification must be exactly {1/" + std::to_string(k) + "}");
    require(roots[0].get_num() == 1, "rational imaginary root with nonunit numerator");
    ++checked;
  };
  for (unsigned alpha = 4; alpha <= 11; ++alpha) {
    for (long k = 1; k <= 3; ++k) check_scaled(graph_with_alpha(alpha), k);
  }
  for (unsigned n = 1; n <= 3; ++n) {
    GabcdParams p = gabcd_params(n);
    for (long k = 4; k <= 5; ++k) check_scaled(build_gabcd(p.a, p.b, p.c, p.d), k);
  }
  std::vector<Graph> corona_bases = {Graph::complete(3), Graph::empty_graph(3),
                                     path_graph(7), cycle_graph(7), Graph::complete(7),
                                     Graph::complete_multipartite({3, 4})};
  for (const Graph& base : corona_bases) {
    for (long k = 6; k <= 7; ++k) check_scaled(corona_construction(base).expr, k);
  }
  std::vector<Graph> embed_bases = {Graph::complete(1), Graph::complete(2), path_graph(4),
                                    cycle_graph(5)};
  for (const Graph& base : embed_bases) {
    for (long k = 1; k <= 2; ++k) {
      EmbedCertificate cert = embed_with_imaginary_roots(base, k);
      std::vector<BigRat> roots = rational_imaginary_classification(cert.expr.poly());
      require(roots.size() == 1 && roots[0] == cert.root_im,
              "embedding classification must match the requested scale");
      ++checked;
    }
  }
  require(checked == 50, "expected 50 constructed graphs, checked " + std::to_string(checked));
}

// 10. Gaussian power identity for n = 3 (mod 4), n <= 19, all k <= n:
// i^k (1+i)^(2(n-k)) = -2^(n-k) i.
void criterion_gaussian_identity() {
  GaussRat unit = GaussRat::unit_i();
  GaussRat one_plus_i(BigRat(1), BigRat(1));
  for (unsigned n = 3; n <= 19; n += 4) {
    for (unsigned k = 0; k <= n; ++k) {
      GaussRat value = unit.pow(k) * one_plus_i.pow(2 * (n - k));
      BigInt scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 2, n - k);
      require(value == GaussRat(BigRat(0), BigRat(-scale)),
              "identity fails at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
}

// 11. Scan determinism: identical serialized reports for 1 and 8 workers.
void criterion_scan_determinism() {
  std::vector<std::string> lines = read_lines(ts::ensure_corpus_file(8, g_corpus_dir));
  ScanOptions one;
  one.jobs = 1;
  ScanOptions eight;
  eight.jobs = 8;
  std::string a = scan_report_to_json(scan_lines(lines, one)).dump(2);
  std::string b = scan_report_to_json(scan_lines(lines, eight)).dump(2);
  require(a == b, "reports differ between 1 and 8 workers");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--corpus-dir") g_corpus_dir = argv[i + 1];
  }

  struct Criterion {
    int id;
    const char* name;
    std::function<void()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "seed table golden suite (exact roots at i)", criterion_seed_table},
      {2, "family parameter sweep n=1..50", criterion_family_sweep},
      {3, "recurrence identity sweep n<=200", criterion_recurrence_sweep},
      {4, "composition formulas vs subset oracle (200 pairs)", criterion_composition_oracle},
      {5, "exhaustive orders 1..7: all verdicts none", criterion_exhaustive_small},
      {6, "exhaustive orders 8 and 9: nothing flagged", criterion_exhaustive_desk_scale},
      {7, "order-14 witness flagged with roots exactly {±i}", criterion_witness},
      {8, "14-vertex tree embedding has order 1509397", criterion_tree_embedding},
      {9, "rational classification of 50 constructed graphs", criterion_rational_classification},
      {10, "Gaussian power identity for n=3 (mod 4)", criterion_gaussian_identity},
      {11, "scan determinism across worker counts", criterion_scan_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criterion.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok) {
      std::printf("criterion %2d PASS (%7.2fs)  %s\n", criterion.id, seconds, criterion.name);
    } else {
      std::printf("criterion %2d FAIL (%7.2fs)  %s: %s\n", criterion.id, seconds,
                  criterion.name, detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures;
}
