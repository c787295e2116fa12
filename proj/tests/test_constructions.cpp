#include <doctest.h>

#include "indroots/certify.hpp"
#include "indroots/constructions.hpp"
#include "indroots/indpoly.hpp"

using namespace indroots;

namespace {

IntPoly from_ints(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

Graph fig4_tree() {
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

GaussRat eval_at_i(const GraphExpr& e) { return e.poly().eval_gauss(GaussRat::unit_i()); }

}  // namespace

TEST_SUITE_BEGIN("constructions");

TEST_CASE("recurrence start and the early pairs") {
  CHECK(dioph(1).x == 1);
  CHECK(dioph(1).y == 1);
  CHECK(dioph(2).x == 5);
  CHECK(dioph(2).y == 3);
  CHECK(dioph(3).x == 19);
  CHECK(dioph(3).y == 11);
  CHECK(dioph(4).x == 71);
  CHECK(dioph(4).y == 41);
  CHECK_THROWS_AS(dioph(0), Error);
}

TEST_CASE("recurrence identities hold through n=200") {
  for (unsigned n = 1; n <= 200; ++n) {
    DiophPair p = dioph(n);
    CHECK(p.x * p.x - 3 * p.y * p.y == -2);
    if (n >= 3) {
      DiophPair a = dioph(n - 1);
      DiophPair b = dioph(n - 2);
      CHECK(a.x * b.x - 3 * a.y * b.y == -4);
    }
  }
}

TEST_CASE("family parameters satisfy both equations") {
  GabcdParams p1 = gabcd_params(1);
  CHECK(p1.a == 3);
  CHECK(p1.b == 3);
  CHECK(p1.c == 1);
  CHECK(p1.d == 112);

  GabcdParams p2 = gabcd_params(2);
  CHECK(p2.a == 9);
  CHECK(p2.b == 45);
  CHECK(p2.d == 93868);

  for (unsigned n = 1; n <= 10; ++n) {
    GabcdParams p = gabcd_params(n);
    CHECK(p.a * p.a * p.a * p.a - 6 * p.a * p.a - 3 * p.b * p.b == 0);
    CHECK(-4 * p.a * p.a * p.a + 4 * p.a - p.b * p.b * p.b + 3 * p.b + 2 + p.d == 0);
  }
}

TEST_CASE("four-clique-join family polynomial") {
  GraphExpr g = build_gabcd(BigInt(1), BigInt(1), BigInt(1), BigInt(1));
  IntPoly expected = from_ints({1, 1}).pow(4) + from_ints({1, 1}).pow(3) +
                     from_ints({1, 1}).pow(2) + from_ints({0, 1}) - IntPoly::constant(2);
  CHECK(g.poly() == expected);
  CHECK(g.alpha() == 4);

  GraphExpr inst = build_gabcd(BigInt(3), BigInt(3), BigInt(1), BigInt(112));
  CHECK(inst.alpha() == 4);
  CHECK(eval_at_i(inst).is_zero());
  CHECK(inst.order() == 4 * 3 + 3 * 3 + 2 * 1 + 112);
  CHECK_THROWS_AS(build_gabcd(BigInt(0), BigInt(1), BigInt(1), BigInt(1)), Error);
}

TEST_CASE("seed table") {
  struct Row {
    int alpha;
    long d;
  };
  for (Row row : {Row{4, 112}, Row{5, 20}, Row{6, 8}, Row{7, 10}, Row{8, 128}, Row{9, 112},
                  Row{10, 5000}, Row{11, 2000}}) {
    SeedRecord s = seed(row.alpha);
    CHECK(s.alpha == row.alpha);
    CHECK(s.d == row.d);
    // Seed invariant: I(seed, i) = -d*i.
    CHECK(eval_at_i(s.seed) == GaussRat(BigRat(0), BigRat(-row.d)));
    CHECK(s.seed.poly().degree() == row.alpha);
  }
  CHECK_THROWS_AS(seed(3), Error);
  CHECK_THROWS_AS(seed(12), Error);

  SeedRecord s6 = seed(6);
  CHECK(s6.seed.poly() == IntPoly::binomial_power(6));
  SeedRecord s7 = seed(7);
  CHECK(s7.seed.poly() == IntPoly::binomial_power(3) + IntPoly::binomial_power(5) +
                              IntPoly::binomial_power(7) - IntPoly::constant(2));
  SeedRecord s10 = seed(10);
  CHECK(s10.seed.poly() ==
        from_ints({1, 2}).pow(4) * from_ints({1, 3}).pow(4) * from_ints({1, 1}).pow(2));
}

TEST_CASE("raising the independence number by 8k") {
  SeedRecord s = seed(6);
  GraphExpr lifted = seed_plus_8k(s.seed, s.d, 1);
  CHECK(lifted.poly() == IntPoly::binomial_power(14) + from_ints({0, 128}));
  CHECK(eval_at_i(lifted).is_zero());

  GraphExpr same = seed_plus_8k(s.seed, s.d, 0);
  CHECK(same.poly() == IntPoly::binomial_power(6) + from_ints({0, 8}));

  for (int alpha = 4; alpha <= 11; ++alpha) {
    SeedRecord record = seed(alpha);
    for (unsigned k = 0; k <= 3; ++k) {
      GraphExpr g = seed_plus_8k(record.seed, record.d, k);
      CHECK(g.alpha() == static_cast<unsigned>(alpha) + 8 * k);
      CHECK(eval_at_i(g).is_zero());
    }
  }
  CHECK_THROWS_AS(seed_plus_8k(seed(6).seed, BigInt(7), 1), Error);
}

TEST_CASE("a graph for every independence number at least 4") {
  for (unsigned alpha = 4; alpha <= 30; ++alpha) {
    GraphExpr g = graph_with_alpha(alpha);
    CHECK(g.alpha() == alpha);
    CHECK(eval_at_i(g).is_zero());
  }
  CHECK_THROWS_AS(graph_with_alpha(3), Error);
}

TEST_CASE("scaling a root from i to i/n") {
  GraphExpr witness = GraphExpr::join_of(
      {GraphExpr::empty_n(BigInt(6)), GraphExpr::complete_n(BigInt(8))});
  GraphExpr halved = scale_root(witness, 2);
  CHECK(halved.poly() == from_ints({1, 2}).pow(6) + from_ints({0, 16}));
  CHECK(halved.poly()
            .eval_gauss(GaussRat(BigRat(0), make_rat(BigInt(1), BigInt(2))))
            .is_zero());
  CHECK(halved.alpha() == witness.alpha());

  CHECK(scale_root(witness, 1).poly() == witness.poly());
  CHECK(scale_root(witness, -3).poly() == scale_root(witness, 3).poly());
  CHECK_THROWS_AS(scale_root(witness, 0), Error);
  CHECK_THROWS_AS(scale_root(GraphExpr::leaf(Graph::complete(3)), 2), Error);
}

TEST_CASE("corona construction") {
  CoronaConstruction k3 = corona_construction(Graph::complete(3));
  CHECK(k3.m == 20);
  CHECK(k3.expr.order() == 9 + 20);
  CHECK(eval_at_i(k3.expr).is_zero());
  IntPoly corona_poly = from_ints({1, 1}).pow(6) +
                        (BigInt(3) * from_ints({1, 1}).pow(4)).shifted_up(1);
  CHECK(k3.expr.poly() == corona_poly + from_ints({0, 20}));

  CoronaConstruction k3bar = corona_construction(Graph::empty_graph(3));
  CHECK(k3bar.m == 27);

  CHECK_THROWS_AS(corona_construction(Graph::empty_graph(4)), Error);
  CHECK(is_connected(realize(k3.expr)));
}

TEST_CASE("every graph embeds with the requested root") {
  EmbedCertificate k3 = embed_with_imaginary_roots(Graph::complete(3), 1);
  CHECK(k3.m == 20);
  CHECK(k3.total_order == 29);
  CHECK(k3.evaluation.is_zero());
  CHECK(k3.root_im == 1);

  EmbedCertificate k1 = embed_with_imaginary_roots(Graph::complete(1), 2);
  CHECK(k1.root_im == make_rat(BigInt(1), BigInt(2)));
  CHECK(k1.evaluation.is_zero());

  CHECK_THROWS_AS(embed_with_imaginary_roots(Graph::complete(1), 0), Error);
}

TEST_CASE("embedding witness induces the original graph") {
  for (long k : {1L, 2L}) {
    Graph g = Graph::empty_graph(3);
    EmbedCertificate cert = embed_with_imaginary_roots(g, k);
    Graph whole = realize(cert.expr);
    REQUIRE(cert.witness.size() == 3);
    for (std::size_t a = 0; a < cert.witness.size(); ++a) {
      for (std::size_t b = a + 1; b < cert.witness.size(); ++b) {
        int u = static_cast<int>(cert.witness[a].get_ui());
        int v = static_cast<int>(cert.witness[b].get_ui());
        CHECK(whole.has_edge(u, v) == g.has_edge(static_cast<int>(a), static_cast<int>(b)));
      }
    }
    CHECK(is_connected(whole));
  }

  Graph k3 = Graph::complete(3);
  EmbedCertificate cert = embed_with_imaginary_roots(k3, 1);
  Graph whole = realize(cert.expr);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      CHECK(whole.has_edge(static_cast<int>(cert.witness[a].get_ui()),
                           static_cast<int>(cert.witness[b].get_ui())));
    }
  }
}

TEST_CASE("the 14-vertex tree needs order 1509397") {
  EmbedCertificate cert = embed_with_imaginary_roots(fig4_tree(), 1);
  CHECK(cert.total_order == 1509397);
  CHECK(cert.evaluation.is_zero());
  CHECK(cert.root_im == 1);
}

TEST_SUITE_END();
