#pragma once

#include <cstddef>

#include "indroots/graph.hpp"
#include "indroots/graph_expr.hpp"
#include "indroots/intpoly.hpp"

namespace indroots {

/// Hard guard for the subset-enumeration oracle.
inline constexpr int kOracleMaxVertices = 25;
/// Practical guard for the recursive algorithm.
inline constexpr int kIndPolyMaxVertices = 60;
/// Default memoization cap; beyond it the recursion keeps running uncached.
inline constexpr std::size_t kIndPolyMemoLimit = std::size_t(1) << 22;

/// Exact independence polynomial by enumerating all 2^n vertex subsets.
IntPoly ind_poly_oracle(const Graph& g);

/// Exact independence polynomial via the vertex decomposition
/// I(G) = I(G - v) + x * I(G - N[v]), factoring over connected components,
/// pivoting on a maximum-degree vertex (ties to the lowest index), memoized
/// on induced vertex-subset keys. The memo cache is call-local.
IntPoly ind_poly(const Graph& g, std::size_t memo_limit = kIndPolyMemoLimit);

/// Compositional evaluation over a graph expression (also reachable as
/// GraphExpr::poly()). Union multiplies, an n-part join is the sum of the
/// parts minus n-1, lex composes, corona uses the cleared-denominator form
/// sum_k s_k x^k I_H^(n-k).
const IntPoly& ind_poly_expr(const GraphExpr& e);

/// Independence number of an expression: deg ind_poly_expr(e).
unsigned alpha(const GraphExpr& e);

}  // namespace indroots
