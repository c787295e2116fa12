#include "indroots/indpoly.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

namespace indroots {

namespace {

std::vector<std::uint64_t> adjacency_words(const Graph& g) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()), 0);
  for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.row_word(v, 0);
  return adj;
}

}  // namespace

IntPoly ind_poly_oracle(const Graph& g) {
  int n = g.order();
  if (n > kOracleMaxVertices) {
    throw GuardError("ind_poly_oracle: order " + std::to_string(n) + " exceeds the guard of " +
                     std::to_string(kOracleMaxVertices));
  }
  std::vector<std::uint64_t> adj = adjacency_words(g);
  std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
  counts[0] = 1;
  std::size_t total = std::size_t(1) << n;
  // indep[mask]: the subset is independent iff the subset minus its lowest
  // vertex is independent and that vertex has no neighbor in the rest.
  std::vector<std::uint64_t> indep((total + 63) / 64, 0);
  indep[0] |= 1;
  for (std::size_t mask = 1; mask < total; ++mask) {
    int v = std::countr_zero(mask);
    std::size_t rest = mask & (mask - 1);
    bool ok = ((indep[rest / 64] >> (rest % 64)) & 1) != 0 &&
              (adj[static_cast<std::size_t>(v)] & rest) == 0;
    if (ok) {
      indep[mask / 64] |= std::uint64_t(1) << (mask % 64);
      ++counts[static_cast<std::size_t>(std::popcount(mask))];
    }
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(counts.size());
  for (auto c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IntPoly(std::move(coeffs));
}

namespace {

struct IndPolyRec {
  const std::vector<std::uint64_t>& adj;
  std::size_t memo_limit;
  std::unordered_map<std::uint64_t, IntPoly> memo;

  std::uint64_t component_of(std::uint64_t mask) const {
    std::uint64_t comp = mask & (~mask + 1);
    while (true) {
      std::uint64_t frontier = comp;
      std::uint64_t scan = comp;
      while (scan != 0) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        frontier |= adj[static_cast<std::size_t>(v)] & mask;
      }
      if (frontier == comp) return comp;
      comp = frontier;
    }
  }

  IntPoly eval(std::uint64_t mask) {
    IntPoly product = IntPoly::constant(1);
    while (mask != 0) {
      std::uint64_t comp = component_of(mask);
      product = product * component_poly(comp);
      mask &= ~comp;
    }
    return product;
  }

  IntPoly component_poly(std::uint64_t comp) {
    if ((comp & (comp - 1)) == 0) return IntPoly({BigInt(1), BigInt(1)});
    if (auto it = memo.find(comp); it != memo.end()) return it->second;

    // Pivot on a maximum-degree vertex within the component, lowest index on
    // ties: I(G) = I(G - v) + x * I(G - N[v]).
    int pivot = -1;
    int best_degree = -1;
    std::uint64_t scan = comp;
    while (scan != 0) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      int d = std::popcount(adj[static_cast<std::size_t>(v)] & comp);
      if (d > best_degree) {
        best_degree = d;
        pivot = v;
      }
    }
    std::uint64_t bit = std::uint64_t(1) << pivot;
    IntPoly without = eval(comp & ~bit);
    IntPoly closed = eval(comp & ~(adj[static_cast<std::size_t>(pivot)] | bit));
    IntPoly result = without + closed.shifted_up(1);
    if (memo.size() < memo_limit) memo.emplace(comp, result);
    return result;
  }
};

}  // namespace

IntPoly ind_poly(const Graph& g, std::size_t memo_limit) {
  int n = g.order();
  if (n > kIndPolyMaxVertices) {
    throw GuardError("ind_poly: order " + std::to_string(n) + " exceeds the guard of " +
                     std::to_string(kIndPolyMaxVertices));
  }
  if (n == 0) return IntPoly::constant(1);
  std::vector<std::uint64_t> adj = adjacency_words(g);
  IndPolyRec rec{adj, memo_limit, {}};
  std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  return rec.eval(full);
}

IntPoly detail_compute_expr_poly(const GraphExpr& e) {
  switch (e.kind()) {
    case GraphExpr::Kind::leaf:
      return ind_poly(e.leaf_graph());
    case GraphExpr::Kind::complete_n:
      return IntPoly::one_plus_ax(e.symbolic_size());
    case GraphExpr::Kind::empty_n: {
      if (!e.symbolic_size().fits_ulong_p()) {
        throw GuardError("edgeless graph order too large for a polynomial of that degree");
      }
      return IntPoly::binomial_power(e.symbolic_size().get_ui());
    }
    case GraphExpr::Kind::union_n: {
      IntPoly product = IntPoly::constant(1);
      for (const auto& part : e.children()) product = product * part.poly();
      return product;
    }
    case GraphExpr::Kind::join_n: {
      // k-part join: sum of the parts' polynomials minus (k - 1).
      IntPoly sum = IntPoly::constant(1);
      bool first = true;
      for (const auto& part : e.children()) {
        if (first) {
          sum = part.poly();
          first = false;
        } else {
          sum = sum + part.poly() - IntPoly::constant(1);
        }
      }
      return sum;
    }
    case GraphExpr::Kind::lex: {
      IntPoly inner = e.children()[1].poly() - IntPoly::constant(1);
      return e.children()[0].poly().compose(inner);
    }
    case GraphExpr::Kind::corona: {
      const GraphExpr& base = e.children()[0];
      const GraphExpr& attach = e.children()[1];
      if (!base.order().fits_ulong_p()) {
        throw GuardError("corona base order too large for the cleared-denominator form");
      }
      unsigned long n = base.order().get_ui();
      const IntPoly& base_poly = base.poly();
      const IntPoly& h = attach.poly();
      unsigned long deg_alpha = static_cast<unsigned long>(base_poly.degree());
      if (h.degree() > 0) {
        unsigned long long worst =
            static_cast<unsigned long long>(n) * static_cast<unsigned long long>(h.degree()) + 1;
        if (worst > degree_guard()) {
          throw GuardError("corona polynomial would exceed the degree guard");
        }
      }
      // sum_k s_k x^k h^(n-k), powers of h taken in ascending order of k.
      IntPoly result;
      IntPoly hp = h.pow(n - deg_alpha);
      for (std::size_t k = deg_alpha + 1; k-- > 0;) {
        if (base_poly.coeff(k) != 0) {
          result = result + (base_poly.coeff(k) * hp).shifted_up(k);
        }
        if (k > 0) hp = hp * h;
      }
      return result;
    }
  }
  throw Error("ind_poly_expr: unknown expression kind");
}

const IntPoly& ind_poly_expr(const GraphExpr& e) { return e.poly(); }

unsigned alpha(const GraphExpr& e) { return e.alpha(); }

}  // namespace indroots
