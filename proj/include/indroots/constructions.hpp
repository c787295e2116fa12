#pragma once

#include <vector>

#include "indroots/graph.hpp"
#include "indroots/graph_expr.hpp"
#include "indroots/intpoly.hpp"

namespace indroots {

/// Solution (x_n, y_n) of x^2 - 3y^2 = -2 from the recurrence
/// x_1 = y_1 = 1, x_2 = 5, y_2 = 3, t_n = 4 t_(n-1) - t_(n-2).
struct DiophPair {
  unsigned n;
  BigInt x;
  BigInt y;
};
DiophPair dioph(unsigned n);

/// Parameters a = 3 y_n, b = 3 y_n x_n, c = 1, d = 4a^3 - 4a + b^3 - 3b - 2,
/// which place a root of the G(a,b,c,d) family polynomial at i.
struct GabcdParams {
  BigInt a;
  BigInt b;
  BigInt c;
  BigInt d;
};
GabcdParams gabcd_params(unsigned n);

/// G(a,b,c,d) = 4K_a + 3K_b + 2K_c + K_d (joins of clique unions), with
/// I(G(a,b,c,d),x) = (1+ax)^4 + (1+bx)^3 + (1+cx)^2 + dx - 2.
GraphExpr build_gabcd(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);

/// Seed graph for one residue of alpha mod 8: I(seed + K_d, i) = 0.
struct SeedRecord {
  int alpha;
  GraphExpr seed;
  BigInt d;
};
/// Seeds for alpha in 4..11. alpha=4 is the G(a,b,c,d) instance at n=1 with
/// its K_d factor separated out (d = 112); 5..11 are fixed small graphs with
/// d in {20, 8, 10, 128, 112, 5000, 2000}.
SeedRecord seed(int alpha);

/// (g union K_(8k)-bar) + K_(16^k d): independence number rises by 8k while
/// the root at i survives because (1+i)^(8k) = 16^k. Requires the seed
/// invariant I(g, i) = -d i, checked exactly.
GraphExpr seed_plus_8k(const GraphExpr& g, const BigInt& d, unsigned k);

/// Connected graph with the requested independence number (>= 4) and
/// independence roots at +/- i.
GraphExpr graph_with_alpha(unsigned alpha);

/// g[K_|n|]: moves roots +/- i to +/- i/|n|; alpha preserved. Requires g to
/// have a root at i, checked exactly. n must be nonzero.
GraphExpr scale_root(const GraphExpr& g, long n);

/// (g corona K2bar) + K_m with m = 2^n I(g, 1/2); requires |g| = 3 (mod 4).
struct CoronaConstruction {
  GraphExpr expr;
  BigInt m;
};
CoronaConstruction corona_construction(const Graph& g);

/// Connected supergraph of g with independence roots at +/- i/|k|.
struct EmbedCertificate {
  GraphExpr expr;
  BigInt m;
  BigInt total_order;
  long k;
  /// The certified root is root_im * i (and its conjugate).
  BigRat root_im;
  GaussRat evaluation;
  /// Vertices of the result inducing a copy of g.
  std::vector<BigInt> witness;
};
/// Pads g to H = g + K_((3 - |g|) mod 4), runs the corona construction, then
/// scales the root by |k|. g is an induced subgraph by construction; the
/// certificate carries the witness vertex list and the exact zero evaluation.
EmbedCertificate embed_with_imaginary_roots(const Graph& g, long k);

}  // namespace indroots
