#include "indroots/constructions.hpp"

#include <cstdlib>

#include "indroots/indpoly.hpp"

namespace indroots {

DiophPair dioph(unsigned n) {
  if (n < 1) throw Error("dioph: index must be at least 1");
  BigInt x_prev(1), y_prev(1);  // n = 1
  if (n == 1) return {1, x_prev, y_prev};
  BigInt x(5), y(3);  // n = 2
  for (unsigned k = 3; k <= n; ++k) {
    BigInt x_next = 4 * x - x_prev;
    BigInt y_next = 4 * y - y_prev;
    x_prev = std::move(x);
    y_prev = std::move(y);
    x = std::move(x_next);
    y = std::move(y_next);
  }
  return {n, x, y};
}

GabcdParams gabcd_params(unsigned n) {
  DiophPair p = dioph(n);
  GabcdParams out;
  out.a = 3 * p.y;
  out.b = out.a * p.x;
  out.c = 1;
  out.d = 4 * out.a * out.a * out.a - 4 * out.a + out.b * out.b * out.b - 3 * out.b - 2;
  if (out.d <= 0) throw Error("gabcd_params: d must be positive");
  return out;
}

namespace {

GraphExpr clique_union(std::size_t copies, const BigInt& size) {
  std::vector<GraphExpr> parts(copies, GraphExpr::complete_n(size));
  return GraphExpr::union_of(std::move(parts));
}

GraphExpr k_partite(std::size_t parts, const BigInt& part_size) {
  std::vector<GraphExpr> sides(parts, GraphExpr::empty_n(part_size));
  return GraphExpr::join_of(std::move(sides));
}

void require_root_at(const GraphExpr& g, const GaussRat& z, const char* what) {
  GaussRat value = g.poly().eval_gauss(z);
  if (!value.is_zero()) {
    throw Error(std::string(what) + ": expression does not vanish at the required root");
  }
}

}  // namespace

GraphExpr build_gabcd(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  if (a < 1 || b < 1 || c < 1 || d < 1) throw Error("build_gabcd: parameters must be positive");
  return GraphExpr::join_of({clique_union(4, a), clique_union(3, b), clique_union(2, c),
                             GraphExpr::complete_n(d)});
}

SeedRecord seed(int alpha) {
  auto K = [](long n) { return GraphExpr::complete_n(BigInt(n)); };
  auto Kbar = [](long n) { return GraphExpr::empty_n(BigInt(n)); };
  switch (alpha) {
    case 4: {
      GabcdParams p = gabcd_params(1);
      GraphExpr g = GraphExpr::join_of(
          {clique_union(4, p.a), clique_union(3, p.b), clique_union(2, p.c)});
      return {4, std::move(g), p.d};
    }
    case 5:
      return {5, GraphExpr::union_of({K(2), K(3), Kbar(3)}), BigInt(20)};
    case 6:
      return {6, Kbar(6), BigInt(8)};
    case 7:
      return {7, GraphExpr::join_of({Kbar(3), Kbar(5), Kbar(7)}), BigInt(10)};
    case 8:
      return {8, GraphExpr::join_of({Kbar(8), k_partite(16, BigInt(6))}), BigInt(128)};
    case 9:
      return {9, GraphExpr::join_of({Kbar(9), k_partite(16, BigInt(6))}), BigInt(112)};
    case 10:
      return {10,
              GraphExpr::union_of({clique_union(4, BigInt(2)), clique_union(4, BigInt(3)),
                                   Kbar(2)}),
              BigInt(5000)};
    case 11:
      return {11,
              GraphExpr::union_of({clique_union(3, BigInt(2)), clique_union(3, BigInt(3)),
                                   Kbar(5)}),
              BigInt(2000)};
    default:
      throw Error("seed: alpha must be between 4 and 11");
  }
}

GraphExpr seed_plus_8k(const GraphExpr& g, const BigInt& d, unsigned k) {
  if (d < 1) throw Error("seed_plus_8k: d must be positive");
  GaussRat at_i = g.poly().eval_gauss(GaussRat::unit_i());
  if (!(at_i == GaussRat(BigRat(0), BigRat(-d)))) {
    throw Error("seed_plus_8k: seed invariant I(g, i) = -d*i does not hold");
  }
  BigInt scaled;
  mpz_ui_pow_ui(scaled.get_mpz_t(), 16, k);
  scaled *= d;
  GraphExpr padded = GraphExpr::union_of({g, GraphExpr::empty_n(BigInt(8) * k)});
  return GraphExpr::join_of({std::move(padded), GraphExpr::complete_n(scaled)});
}

GraphExpr graph_with_alpha(unsigned alpha) {
  if (alpha < 4) throw Error("graph_with_alpha: alpha must be at least 4");
  unsigned k = (alpha - 4) / 8;
  SeedRecord s = seed(static_cast<int>(4 + (alpha - 4) % 8));
  return seed_plus_8k(s.seed, s.d, k);
}

GraphExpr scale_root(const GraphExpr& g, long n) {
  if (n == 0) throw Error("scale_root: scale must be nonzero");
  require_root_at(g, GaussRat::unit_i(), "scale_root");
  unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
  return GraphExpr::lex(g, GraphExpr::complete_n(BigInt(m)));
}

CoronaConstruction corona_construction(const Graph& g) {
  int n = g.order();
  if (n % 4 != 3) throw Error("corona_construction: order must be 3 (mod 4)");
  IntPoly p = ind_poly(g);
  // m = 2^n I(g, 1/2) = sum_k s_k 2^(n-k), an integer since deg <= n.
  BigInt m(0);
  for (int k = 0; k <= p.degree(); ++k) {
    BigInt term;
    mpz_mul_2exp(term.get_mpz_t(), p.coeff(static_cast<std::size_t>(k)).get_mpz_t(),
                 static_cast<mp_bitcnt_t>(n - k));
    m += term;
  }
  GraphExpr expr = GraphExpr::join_of(
      {GraphExpr::corona(GraphExpr::leaf(g), GraphExpr::empty_n(BigInt(2))),
       GraphExpr::complete_n(m)});
  require_root_at(expr, GaussRat::unit_i(), "corona_construction");
  return {std::move(expr), std::move(m)};
}

EmbedCertificate embed_with_imaginary_roots(const Graph& g, long k) {
  if (k == 0) throw Error("embed_with_imaginary_roots: k must be nonzero");
  int ell = g.order() % 4;
  int pad = (3 - ell) % 4;
  if (pad < 0) pad += 4;
  Graph host = pad == 0 ? g : join_g(g, Graph::complete(pad));
  CoronaConstruction corona = corona_construction(host);
  GraphExpr scaled = scale_root(corona.expr, k);

  unsigned long abs_k = static_cast<unsigned long>(k < 0 ? -k : k);
  BigRat root_im = make_rat(BigInt(1), BigInt(abs_k));
  GaussRat evaluation = scaled.poly().eval_gauss(GaussRat(BigRat(0), root_im));
  if (!evaluation.is_zero()) {
    throw Error("embed_with_imaginary_roots: exact root check failed");
  }
  // g's vertices come first in the host, the host's base vertices come first
  // in the corona and the join, and the lex product is outer-major, so vertex
  // v of g sits at index v * |k| with the inner clique vertex 0.
  std::vector<BigInt> witness;
  witness.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    witness.emplace_back(BigInt(v) * abs_k);
  }
  BigInt total_order = scaled.order();
  return EmbedCertificate{std::move(scaled), std::move(corona.m), std::move(total_order),
                          k, std::move(root_im), std::move(evaluation), std::move(witness)};
}

}  // namespace indroots
