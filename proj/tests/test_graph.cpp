#include <doctest.h>

#include <random>

#include "indroots/graph.hpp"
#include "support/small_graph_gen.hpp"

using namespace indroots;

namespace {

// Structural invariants every operation must preserve.
void check_invariants(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    CHECK_FALSE(g.has_edge(v, v));
    for (int u = v + 1; u < g.order(); ++u) {
      CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    }
    // Bits beyond index n-1 must be clear.
    for (int w = 0; w < g.words_per_row(); ++w) {
      std::uint64_t word = g.row_word(v, w);
      for (int b = 0; b < 64; ++b) {
        if (64 * w + b >= g.order()) CHECK(((word >> b) & 1) == 0);
      }
    }
  }
}

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("complete and empty builders") {
  CHECK(Graph::complete(1).edge_count() == 0);
  CHECK(Graph::complete(3).edge_count() == 3);
  CHECK(Graph::complete(0).order() == 0);
  CHECK(Graph::empty_graph(6).edge_count() == 0);
  CHECK(Graph::empty_graph(1) == Graph::complete(1));
  check_invariants(Graph::complete(67));
}

TEST_CASE("complement is an involution") {
  CHECK(complement(Graph::complete(3)) == Graph::empty_graph(3));
  CHECK(complement(Graph::empty_graph(4)) == Graph::complete(4));
  CHECK(complement(complement(path(7))) == path(7));
  CHECK(complement(Graph::empty_graph(0)).order() == 0);

  Graph c5 = cycle(5);
  Graph cc = complement(c5);
  CHECK(cc.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);
  check_invariants(cc);
}

TEST_CASE("complete multipartite") {
  Graph k357 = Graph::complete_multipartite({3, 5, 7});
  CHECK(k357.order() == 15);
  CHECK(k357.edge_count() == 3 * 5 + 3 * 7 + 5 * 7);
  CHECK(Graph::complete_multipartite({1, 1}) == Graph::complete(2));
  Graph k16_6 = Graph::complete_multipartite(std::vector<int>(16, 6));
  CHECK(k16_6.order() == 96);
  CHECK_THROWS_AS(Graph::complete_multipartite({3, 0}), Error);
  CHECK_THROWS_AS(Graph::complete_multipartite({}), Error);
}

TEST_CASE("union and join") {
  Graph two_k2 = union_g(Graph::complete(2), Graph::complete(2));
  CHECK(two_k2.order() == 4);
  CHECK(two_k2.edge_count() == 2);
  CHECK_FALSE(is_connected(two_k2));

  Graph witness = join_g(Graph::empty_graph(6), Graph::complete(8));
  CHECK(witness.order() == 14);
  CHECK(witness.edge_count() == 28 + 48);
  CHECK(is_connected(witness));
  check_invariants(witness);

  CHECK(join_g(path(5), Graph::empty_graph(0)) == path(5));
  CHECK(union_g(Graph::empty_graph(0), path(5)) == path(5));
}

TEST_CASE("lexicographic product") {
  Graph fig1 = lex_g(path(3), Graph::complete(2));
  CHECK(fig1.order() == 6);
  CHECK(fig1.edge_count() == 11);
  check_invariants(fig1);

  CHECK(lex_g(path(4), Graph::complete(1)) == path(4));

  Graph k22 = lex_g(Graph::complete(2), Graph::empty_graph(2));
  CHECK(k22.order() == 4);
  CHECK(k22.edge_count() == 4);
  CHECK(k22 == Graph::complete_multipartite({2, 2}));
}

TEST_CASE("corona") {
  Graph star = corona_g(Graph::complete(1), Graph::empty_graph(5));
  CHECK(star.order() == 6);
  CHECK(star.edge_count() == 5);
  CHECK(star.degree(0) == 5);

  Graph fig2 = corona_g(path(3), Graph::empty_graph(2));
  CHECK(fig2.order() == 9);
  CHECK(fig2.edge_count() == 2 + 6);
  CHECK(is_connected(fig2));
  check_invariants(fig2);

  CHECK(corona_g(Graph::empty_graph(0), path(3)).order() == 0);
}

TEST_CASE("order caps route oversized graphs to expressions") {
  Graph big = Graph::empty_graph(400);
  CHECK_THROWS_AS(join_g(big, big), GuardError);
  CHECK_THROWS_AS(lex_g(Graph::complete(30), Graph::complete(30)), GuardError);
  CHECK_THROWS_AS(Graph::complete(513), GuardError);
  CHECK(Graph::complete(512).order() == 512);
}

TEST_CASE("graph6 worked examples") {
  CHECK(parse_graph6("Bw") == Graph::complete(3));
  CHECK(write_graph6(Graph::complete(3)) == "Bw");
  CHECK(write_graph6(Graph::empty_graph(1)) == "@");
  CHECK(parse_graph6("@") == Graph::empty_graph(1));
  CHECK(write_graph6(Graph::empty_graph(0)) == "?");
  CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 long form size word") {
  Graph g = path(63);
  std::string line = write_graph6(g);
  CHECK(line.size() == 4 + (63 * 62 / 2 + 5) / 6);
  CHECK(static_cast<unsigned char>(line[0]) == 126);
  CHECK(parse_graph6(line) == g);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937 rng(13371337);
  std::uniform_int_distribution<int> order(0, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    Graph g = testsupport::random_graph(rng, order(rng));
    Graph back = parse_graph6(write_graph6(g));
    CHECK(back == g);
  }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  // 'B' promises 3 vertices and one edge byte.
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);
  // Space is below the printable graph6 range.
  CHECK_THROWS_AS(parse_graph6("B "), ParseError);
  try {
    parse_graph6("B ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 1);
  }
  // K_2 with nonzero padding: order 2 has one edge bit, five padding bits.
  try {
    parse_graph6("Aw");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 1);
  }
  CHECK(parse_graph6("A_") == Graph::complete(2));
  // An in-range graph6 order that exceeds the concrete cap is a guard error.
  std::string too_big = write_graph6(Graph::empty_graph(512));
  too_big[3] = static_cast<char>(too_big[3] + 1);  // order 513, no edge bytes needed change
  CHECK_THROWS_AS(parse_graph6(too_big), GuardError);
}

TEST_CASE("write then parse is the identity on generated corpora") {
  for (const auto& line : testsupport::nonisomorphic_graphs_g6(5)) {
    CHECK(write_graph6(parse_graph6(line)) == line);
  }
}

TEST_SUITE_END();
