#pragma once

#include <string>
#include <string_view>

#include "dirdom/digraph.hpp"
#include "dirdom/graph.hpp"

namespace dirdom {

// Short-form graph6 (order < 63, no header). Extended encodings are rejected
// with a ParseError; the bit layout is the standard column-major upper
// triangle, six bits per printable character.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Plain text edge list: first line "n m", then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Digraph text: first line "n", then one "u v" line per arc u->v.
Digraph parse_digraph(std::string_view text);
std::string write_digraph(const Digraph& d);

}  // namespace dirdom
