#include "indroots/graph_expr.hpp"

#include <mutex>
#include <optional>
#include <sstream>

#include "indroots/indpoly.hpp"

namespace indroots {

// Defined in indpoly.cpp.
IntPoly detail_compute_expr_poly(const GraphExpr& e);

struct GraphExpr::Node {
  Kind kind;
  Graph graph;                    // leaf
  BigInt symbolic;                // complete_n / empty_n
  std::vector<GraphExpr> children;
  BigInt order;

  mutable std::mutex poly_mutex;
  mutable std::optional<IntPoly> poly;
};

namespace {

BigInt sum_of_orders(const std::vector<GraphExpr>& parts) {
  BigInt total(0);
  for (const auto& p : parts) total += p.order();
  return total;
}

}  // namespace

GraphExpr GraphExpr::leaf(Graph g) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::leaf;
  node->order = BigInt(g.order());
  node->graph = std::move(g);
  return GraphExpr(std::move(node));
}

GraphExpr GraphExpr::complete_n(BigInt n) {
  if (n < 0) throw Error("complete_n: negative order");
  auto node = std::make_shared<Node>();
  node->kind = Kind::complete_n;
  node->symbolic = n;
  node->order = std::move(n);
  return GraphExpr(std::move(node));
}

GraphExpr GraphExpr::empty_n(BigInt n) {
  if (n < 0) throw Error("empty_n: negative order");
  auto node = std::make_shared<Node>();
  node->kind = Kind::empty_n;
  node->symbolic = n;
  node->order = std::move(n);
  return GraphExpr(std::move(node));
}

GraphExpr GraphExpr::union_of(std::vector<GraphExpr> parts) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::union_n;
  node->order = sum_of_orders(parts);
  node->children = std::move(parts);
  return GraphExpr(std::move(node));
}

GraphExpr GraphExpr::join_of(std::vector<GraphExpr> parts) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::join_n;
  node->order = sum_of_orders(parts);
  node->children = std::move(parts);
  return GraphExpr(std::move(node));
}

GraphExpr GraphExpr::lex(GraphExpr outer, GraphExpr inner) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::lex;
  node->order = outer.order() * inner.order();
  node->children = {std::move(outer), std::move(inner)};
  return GraphExpr(std::move(node));
}

GraphExpr GraphExpr::corona(GraphExpr base, GraphExpr attach) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::corona;
  node->order = base.order() * (1 + attach.order());
  node->children = {std::move(base), std::move(attach)};
  return GraphExpr(std::move(node));
}

GraphExpr::Kind GraphExpr::kind() const { return node_->kind; }

const BigInt& GraphExpr::order() const { return node_->order; }

const Graph& GraphExpr::leaf_graph() const {
  if (node_->kind != Kind::leaf) throw Error("leaf_graph on a non-leaf expression");
  return node_->graph;
}

const BigInt& GraphExpr::symbolic_size() const {
  if (node_->kind != Kind::complete_n && node_->kind != Kind::empty_n) {
    throw Error("symbolic_size on a non-symbolic expression");
  }
  return node_->symbolic;
}

const std::vector<GraphExpr>& GraphExpr::children() const { return node_->children; }

const IntPoly& GraphExpr::poly() const {
  std::lock_guard<std::mutex> lock(node_->poly_mutex);
  if (!node_->poly) node_->poly = detail_compute_expr_poly(*this);
  return *node_->poly;
}

unsigned GraphExpr::alpha() const {
  return static_cast<unsigned>(poly().degree());
}

std::string GraphExpr::to_string() const {
  std::ostringstream os;
  switch (node_->kind) {
    case Kind::leaf:
      os << "g6:" << write_graph6(node_->graph);
      break;
    case Kind::complete_n:
      os << "K[" << node_->symbolic.get_str() << "]";
      break;
    case Kind::empty_n:
      os << "Kbar[" << node_->symbolic.get_str() << "]";
      break;
    case Kind::union_n:
    case Kind::join_n: {
      const auto& parts = node_->children;
      bool all_same = parts.size() > 1;
      for (const auto& p : parts) {
        if (p.node_ != parts.front().node_) {
          all_same = false;
          break;
        }
      }
      if (all_same) {
        // union(K[a],...,K[a]) compacts to m*K[a]; join has no shorthand.
        if (node_->kind == Kind::union_n) {
          os << parts.size() << "*" << parts.front().to_string();
          break;
        }
      }
      os << (node_->kind == Kind::union_n ? "union(" : "join(");
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) os << ",";
        os << parts[i].to_string();
      }
      os << ")";
      break;
    }
    case Kind::lex:
      os << "lex(" << node_->children[0].to_string() << "," << node_->children[1].to_string()
         << ")";
      break;
    case Kind::corona:
      os << "corona(" << node_->children[0].to_string() << ","
         << node_->children[1].to_string() << ")";
      break;
  }
  return os.str();
}

Graph realize(const GraphExpr& e) {
  switch (e.kind()) {
    case GraphExpr::Kind::leaf:
      return e.leaf_graph();
    case GraphExpr::Kind::complete_n: {
      if (e.symbolic_size() > Graph::kMaxVertices) {
        throw GuardError("realize: symbolic complete graph exceeds the concrete cap");
      }
      return Graph::complete(static_cast<int>(e.symbolic_size().get_ui()));
    }
    case GraphExpr::Kind::empty_n: {
      if (e.symbolic_size() > Graph::kMaxVertices) {
        throw GuardError("realize: symbolic edgeless graph exceeds the concrete cap");
      }
      return Graph::empty_graph(static_cast<int>(e.symbolic_size().get_ui()));
    }
    case GraphExpr::Kind::union_n: {
      Graph acc = Graph::empty_graph(0);
      for (const auto& p : e.children()) acc = union_g(acc, realize(p));
      return acc;
    }
    case GraphExpr::Kind::join_n: {
      if (e.children().empty()) return Graph::empty_graph(0);
      Graph acc = realize(e.children().front());
      for (std::size_t i = 1; i < e.children().size(); ++i) {
        acc = join_g(acc, realize(e.children()[i]));
      }
      return acc;
    }
    case GraphExpr::Kind::lex:
      return lex_g(realize(e.children()[0]), realize(e.children()[1]));
    case GraphExpr::Kind::corona:
      return corona_g(realize(e.children()[0]), realize(e.children()[1]));
  }
  throw Error("realize: unknown expression kind");
}

}  // namespace indroots
