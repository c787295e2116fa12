#pragma once

#include <memory>
#include <string>
#include <vector>

#include "indroots/graph.hpp"
#include "indroots/intpoly.hpp"

namespace indroots {

/// Algebraic expression DAG over graphs, evaluated lazily. Concrete graphs
/// live in leaves; complete and edgeless graphs may also appear symbolically
/// with orders far beyond the concrete cap, since only their polynomials and
/// orders are ever needed. Nodes are immutable and shareable; the polynomial
/// cache is filled once under a per-node lock.
class GraphExpr {
 public:
  enum class Kind { leaf, complete_n, empty_n, union_n, join_n, lex, corona };

  static GraphExpr leaf(Graph g);
  /// K_n for arbitrary-precision n >= 0.
  static GraphExpr complete_n(BigInt n);
  /// Complement of K_n for arbitrary-precision n >= 0.
  static GraphExpr empty_n(BigInt n);
  static GraphExpr union_of(std::vector<GraphExpr> parts);
  static GraphExpr join_of(std::vector<GraphExpr> parts);
  static GraphExpr lex(GraphExpr outer, GraphExpr inner);
  static GraphExpr corona(GraphExpr base, GraphExpr attach);

  Kind kind() const;
  const BigInt& order() const;
  /// Leaf graph; pre: kind() == leaf.
  const Graph& leaf_graph() const;
  /// Symbolic order; pre: kind() is complete_n or empty_n.
  const BigInt& symbolic_size() const;
  /// Children: all parts for union_n/join_n, {outer, inner} for lex,
  /// {base, attach} for corona, empty for leaves.
  const std::vector<GraphExpr>& children() const;

  /// Independence polynomial, computed on demand and cached on the node.
  const IntPoly& poly() const;
  /// Independence number: the degree of poly().
  unsigned alpha() const;

  /// Expression-language text that parses back to an equivalent expression.
  std::string to_string() const;

 private:
  struct Node;
  explicit GraphExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Builds the concrete graph an expression denotes; errors when any
/// intermediate order exceeds the concrete cap.
Graph realize(const GraphExpr& e);

}  // namespace indroots
