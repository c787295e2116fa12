#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indroots/intpoly.hpp"

namespace indroots {

/// Concrete simple graph with bitset adjacency rows. Immutable after
/// construction; every operation returns a fresh value. Orders beyond
/// kMaxVertices belong in GraphExpr.
class Graph {
 public:
  static constexpr int kMaxVertices = 512;

  Graph() = default;

  /// K_n.
  static Graph complete(int n);
  /// Complement of K_n: n isolated vertices.
  static Graph empty_graph(int n);
  /// Complete multipartite graph; parts must be positive.
  static Graph complete_multipartite(const std::vector<int>& parts);
  /// n vertices plus the given edges; rejects loops and out-of-range ids.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  long long edge_count() const;
  int words_per_row() const { return words_; }
  std::uint64_t row_word(int v, int w) const { return bits_[static_cast<std::size_t>(v) * words_ + w]; }

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(int n);
  void set_edge(int u, int v);
  static void check_order(long long n, const char* what);

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;

  friend Graph complement(const Graph&);
  friend Graph union_g(const Graph&, const Graph&);
  friend Graph join_g(const Graph&, const Graph&);
  friend Graph lex_g(const Graph&, const Graph&);
  friend Graph corona_g(const Graph&, const Graph&);
  friend Graph parse_graph6(std::string_view);
};

Graph complement(const Graph& g);
/// Disjoint union; h's vertices are relabeled after g's.
Graph union_g(const Graph& g, const Graph& h);
/// Disjoint union plus all edges between the two sides.
Graph join_g(const Graph& g, const Graph& h);
/// Lexicographic product g[h]: vertex (v,u) gets id v*|h|+u, and
/// (v,u) ~ (v',u') iff v ~ v' in g, or v = v' and u ~ u' in h.
Graph lex_g(const Graph& g, const Graph& h);
/// Corona: a fresh copy of h joined to each vertex of g. Base vertices keep
/// ids 0..|g|-1; the copy for base v occupies |g|+v*|h| .. |g|+(v+1)*|h|-1.
Graph corona_g(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);

/// graph6 codec, bit-exact per the de facto standard: every byte is 63 plus a
/// 6-bit group, size word first, then the upper triangle x(0,1), x(0,2),
/// x(1,2), x(0,3), ... padded with zeros to a multiple of 6.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

}  // namespace indroots
