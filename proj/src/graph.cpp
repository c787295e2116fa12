#include "indroots/graph.hpp"

#include <bit>

namespace indroots {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

void Graph::check_order(long long n, const char* what) {
  if (n < 0) throw Error(std::string(what) + ": negative order");
  if (n > kMaxVertices) {
    throw GuardError(std::string(what) + ": order " + std::to_string(n) +
                     " exceeds the concrete graph cap of " + std::to_string(kMaxVertices) +
                     "; use a graph expression instead");
  }
}

void Graph::set_edge(int u, int v) {
  bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t(1) << (v % 64);
  bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t(1) << (u % 64);
}

bool Graph::has_edge(int u, int v) const {
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(row_word(v, w));
  return d;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

Graph Graph::complete(int n) {
  check_order(n, "complete");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
  }
  return g;
}

Graph Graph::empty_graph(int n) {
  check_order(n, "empty_graph");
  return Graph(n);
}

Graph Graph::complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw Error("complete_multipartite: no parts");
  long long total = 0;
  for (int p : parts) {
    if (p <= 0) throw Error("complete_multipartite: parts must be positive");
    total += p;
  }
  check_order(total, "complete_multipartite");
  Graph g(static_cast<int>(total));
  int offset = 0;
  std::vector<std::pair<int, int>> ranges;
  for (int p : parts) {
    ranges.emplace_back(offset, offset + p);
    offset += p;
  }
  for (std::size_t a = 0; a < ranges.size(); ++a) {
    for (std::size_t b = a + 1; b < ranges.size(); ++b) {
      for (int u = ranges[a].first; u < ranges[a].second; ++u) {
        for (int v = ranges[b].first; v < ranges[b].second; ++v) g.set_edge(u, v);
      }
    }
  }
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  check_order(n, "from_edges");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("from_edges: vertex out of range");
    if (u == v) throw Error("from_edges: loops are not allowed");
    g.set_edge(u, v);
  }
  return g;
}

Graph complement(const Graph& g) {
  Graph r(g.n_);
  for (int u = 0; u < g.n_; ++u) {
    for (int v = u + 1; v < g.n_; ++v) {
      if (!g.has_edge(u, v)) r.set_edge(u, v);
    }
  }
  return r;
}

Graph union_g(const Graph& g, const Graph& h) {
  long long n = static_cast<long long>(g.n_) + h.n_;
  Graph::check_order(n, "union_g");
  Graph r(static_cast<int>(n));
  for (int u = 0; u < g.n_; ++u) {
    for (int v = u + 1; v < g.n_; ++v) {
      if (g.has_edge(u, v)) r.set_edge(u, v);
    }
  }
  for (int u = 0; u < h.n_; ++u) {
    for (int v = u + 1; v < h.n_; ++v) {
      if (h.has_edge(u, v)) r.set_edge(g.n_ + u, g.n_ + v);
    }
  }
  return r;
}

Graph join_g(const Graph& g, const Graph& h) {
  long long n = static_cast<long long>(g.n_) + h.n_;
  Graph::check_order(n, "join_g");
  Graph r = union_g(g, h);
  for (int u = 0; u < g.n_; ++u) {
    for (int v = 0; v < h.n_; ++v) r.set_edge(u, g.n_ + v);
  }
  return r;
}

Graph lex_g(const Graph& g, const Graph& h) {
  long long n = static_cast<long long>(g.n_) * h.n_;
  Graph::check_order(n, "lex_g");
  Graph r(static_cast<int>(n));
  auto id = [&](int v, int u) { return v * h.n_ + u; };
  for (int v1 = 0; v1 < g.n_; ++v1) {
    for (int u1 = 0; u1 < h.n_; ++u1) {
      for (int v2 = v1; v2 < g.n_; ++v2) {
        for (int u2 = (v2 == v1 ? u1 + 1 : 0); u2 < h.n_; ++u2) {
          bool adjacent = (v1 == v2) ? h.has_edge(u1, u2) : g.has_edge(v1, v2);
          if (adjacent) r.set_edge(id(v1, u1), id(v2, u2));
        }
      }
    }
  }
  return r;
}

Graph corona_g(const Graph& g, const Graph& h) {
  long long n = static_cast<long long>(g.n_) * (1 + static_cast<long long>(h.n_));
  Graph::check_order(n, "corona_g");
  Graph r(static_cast<int>(n));
  for (int u = 0; u < g.n_; ++u) {
    for (int v = u + 1; v < g.n_; ++v) {
      if (g.has_edge(u, v)) r.set_edge(u, v);
    }
  }
  for (int v = 0; v < g.n_; ++v) {
    int base = g.n_ + v * h.n_;
    for (int u1 = 0; u1 < h.n_; ++u1) {
      r.set_edge(v, base + u1);
      for (int u2 = u1 + 1; u2 < h.n_; ++u2) {
        if (h.has_edge(u1, u2)) r.set_edge(base + u1, base + u2);
      }
    }
  }
  return r;
}

bool is_connected(const Graph& g) {
  int n = g.order();
  if (n <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (!seen[u] && g.has_edge(v, u)) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

int g6_value(std::string_view s, std::size_t pos) {
  unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c < kG6Lo || c > kG6Hi) {
    throw ParseError("graph6: byte outside the printable range 63..126", pos);
  }
  return c - kG6Lo;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("graph6: empty line", 0);
  std::size_t pos = 0;
  long long n;
  int first = g6_value(line, pos);
  if (first < 63) {
    n = first;
    pos = 1;
  } else {
    if (line.size() < 4) throw ParseError("graph6: truncated size word", line.size());
    if (static_cast<unsigned char>(line[1]) == 126) {
      throw ParseError("graph6: orders beyond 258047 are not supported", 1);
    }
    n = (static_cast<long long>(g6_value(line, 1)) << 12) |
        (static_cast<long long>(g6_value(line, 2)) << 6) |
        static_cast<long long>(g6_value(line, 3));
    pos = 4;
  }
  Graph::check_order(n, "parse_graph6");

  long long pair_bits = n * (n - 1) / 2;
  std::size_t body = static_cast<std::size_t>((pair_bits + 5) / 6);
  if (line.size() < pos + body) {
    throw ParseError("graph6: body shorter than the order requires", line.size());
  }
  if (line.size() > pos + body) {
    throw ParseError("graph6: trailing bytes after the edge bits", pos + body);
  }

  Graph g(static_cast<int>(n));
  long long idx = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++idx) {
      std::size_t at = pos + static_cast<std::size_t>(idx / 6);
      int bit = 5 - static_cast<int>(idx % 6);
      if ((g6_value(line, at) >> bit) & 1) g.set_edge(u, v);
    }
  }
  if (body > 0) {
    int last = g6_value(line, pos + body - 1);
    int used = static_cast<int>(pair_bits - 6 * (static_cast<long long>(body) - 1));
    if ((last & ((1 << (6 - used)) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits", pos + body - 1);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Lo));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Lo));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    acc <<= (6 - filled);
    out.push_back(static_cast<char>(acc + kG6Lo));
  }
  return out;
}

}  // namespace indroots
