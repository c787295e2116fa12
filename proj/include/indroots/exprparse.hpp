#pragma once

#include <string_view>

#include "indroots/graph_expr.hpp"

namespace indroots {

/// Parses the graph expression language:
///
///   expr := atom | "union(" expr {"," expr} ")" | "join(" expr {"," expr} ")"
///         | "lex(" expr "," expr ")" | "corona(" expr "," expr ")"
///   atom := "K[" int "]" | "Kbar[" int "]" | "Kpartite[" int "," int "]"
///         | "g6:" graph6-token | int "*" atom
///
/// Replication m*A lowers to a union of m copies. Whitespace between tokens
/// is ignored. Throws ParseError with the byte offset on malformed input.
GraphExpr parse_expr(std::string_view text);

}  // namespace indroots
