#include "indroots/exprparse.hpp"

#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "indroots/graph.hpp"

namespace indroots {

namespace {

constexpr unsigned long kMaxReplication = 1'000'000;

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  BigInt integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return BigInt(std::string(text.substr(start, pos - start)), 10);
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    return std::string(text.substr(start, pos - start));
  }

  GraphExpr graph6_atom() {
    std::size_t start = pos;
    while (pos < text.size()) {
      unsigned char c = static_cast<unsigned char>(text[pos]);
      if (c == ',' || c == ')' || std::isspace(c)) break;
      ++pos;
    }
    if (pos == start) fail("expected a graph6 token after g6:");
    try {
      return GraphExpr::leaf(parse_graph6(text.substr(start, pos - start)));
    } catch (const ParseError& e) {
      throw ParseError("bad graph6 token", start + e.offset);
    }
  }

  GraphExpr atom() {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t count_pos = pos;
      BigInt count = integer();
      expect('*');
      if (count < 1 || count > kMaxReplication) {
        pos = count_pos;
        fail("replication count out of range");
      }
      GraphExpr inner = atom();
      std::vector<GraphExpr> copies(count.get_ui(), inner);
      return GraphExpr::union_of(std::move(copies));
    }
    std::size_t word_pos = pos;
    std::string word = identifier();
    if (word == "K") {
      expect('[');
      BigInt n = integer();
      expect(']');
      return GraphExpr::complete_n(std::move(n));
    }
    if (word == "Kbar") {
      expect('[');
      BigInt n = integer();
      expect(']');
      return GraphExpr::empty_n(std::move(n));
    }
    if (word == "Kpartite") {
      expect('[');
      BigInt parts = integer();
      expect(',');
      BigInt part_size = integer();
      expect(']');
      if (parts < 1 || parts > kMaxReplication) {
        pos = word_pos;
        fail("Kpartite part count out of range");
      }
      std::vector<GraphExpr> sides(parts.get_ui(), GraphExpr::empty_n(part_size));
      return GraphExpr::join_of(std::move(sides));
    }
    if (word == "g6" && try_consume(':')) return graph6_atom();
    pos = word_pos;
    fail(word.empty() ? "expected an expression" : "unknown construct '" + word + "'");
  }

  std::vector<GraphExpr> argument_list(std::size_t min_args, std::size_t max_args) {
    expect('(');
    std::vector<GraphExpr> args;
    std::size_t open_pos = pos;
    if (!try_consume(')')) {
      args.push_back(expression());
      while (try_consume(',')) args.push_back(expression());
      expect(')');
    }
    if (args.size() < min_args || args.size() > max_args) {
      pos = open_pos;
      fail("wrong number of arguments");
    }
    return args;
  }

  GraphExpr expression() {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) return atom();
    std::size_t word_pos = pos;
    std::string word = identifier();
    if (word == "union") {
      return GraphExpr::union_of(
          argument_list(1, std::numeric_limits<std::size_t>::max()));
    }
    if (word == "join") {
      return GraphExpr::join_of(
          argument_list(1, std::numeric_limits<std::size_t>::max()));
    }
    if (word == "lex") {
      auto args = argument_list(2, 2);
      return GraphExpr::lex(std::move(args[0]), std::move(args[1]));
    }
    if (word == "corona") {
      auto args = argument_list(2, 2);
      return GraphExpr::corona(std::move(args[0]), std::move(args[1]));
    }
    pos = word_pos;
    return atom();
  }
};

}  // namespace

GraphExpr parse_expr(std::string_view text) {
  Parser parser{text};
  GraphExpr result = parser.expression();
  if (!parser.done()) parser.fail("trailing characters after the expression");
  return result;
}

}  // namespace indroots
