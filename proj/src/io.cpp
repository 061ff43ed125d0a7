#include "dirdom/io.hpp"

#include <charconv>
#include <sstream>
#include <string>

#include "dirdom/errors.hpp"

namespace dirdom {
namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

// graph6 packs the upper triangle column by column: x(0,1), x(0,2), x(1,2),
// x(0,3), ... Six bits per character, most significant bit first.
int g6_bit_index(int i, int j) {  // i < j
  return j * (j - 1) / 2 + i;
}

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line = 0;

  bool next(std::string_view& out) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    out = text.substr(pos, end - pos);
    if (!out.empty() && out.back() == '\r') out.remove_suffix(1);
    pos = end + 1;
    ++line;
    return true;
  }
};

bool parse_int(std::string_view token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 word");
  for (char c : text)
    if (c < kG6Lo || c > kG6Hi)
      throw ParseError("graph6 character outside the printable range [63,126]");
  if (text[0] == 126) throw ParseError("unsupported encoding: extended graph6 (order >= 63)");
  int n = text[0] - kG6Lo;
  Graph g(n);
  int nbits = n * (n - 1) / 2;
  std::size_t need = 1 + static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() < need) throw ParseError("truncated graph6 bit payload");
  if (text.size() > need) throw ParseError("trailing data after graph6 payload");
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int value = text[1 + static_cast<std::size_t>(bit / 6)] - kG6Lo;
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero in well-formed graph6.
  for (; bit < static_cast<int>(need - 1) * 6; ++bit) {
    int value = text[1 + static_cast<std::size_t>(bit / 6)] - kG6Lo;
    if ((value >> (5 - bit % 6)) & 1) throw ParseError("nonzero padding bits in graph6 payload");
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  if (n >= 63) throw ResourceCapError("graph6 short form supports orders below 63");
  std::string out;
  out.push_back(static_cast<char>(kG6Lo + n));
  int nbits = n * (n - 1) / 2;
  std::vector<unsigned char> payload(static_cast<std::size_t>((nbits + 5) / 6), 0);
  for (auto [u, v] : g.edges()) {
    int b = g6_bit_index(u, v);
    payload[static_cast<std::size_t>(b / 6)] |= static_cast<unsigned char>(1 << (5 - b % 6));
  }
  for (unsigned char c : payload) out.push_back(static_cast<char>(kG6Lo + c));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw ParseError("line 1: expected header \"n m\"");
  auto header = split_ws(line);
  int n = 0, m = 0;
  if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m) || n < 0 || m < 0)
    throw ParseError("line 1: expected header \"n m\"");
  Graph g(n);
  for (int k = 0; k < m; ++k) {
    if (!reader.next(line))
      throw ParseError("edge count mismatch: header promises " + std::to_string(m) + " edges");
    auto tok = split_ws(line);
    int u = 0, v = 0;
    if (tok.size() != 2 || !parse_int(tok[0], u) || !parse_int(tok[1], v))
      throw ParseError("line " + std::to_string(reader.line) + ": expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("line " + std::to_string(reader.line) + ": vertex id out of range");
    if (u == v) throw ParseError("line " + std::to_string(reader.line) + ": self-loop");
    if (g.adjacent(u, v))
      throw ParseError("line " + std::to_string(reader.line) + ": duplicate edge");
    g.add_edge(u, v);
  }
  while (reader.next(line))
    if (!split_ws(line).empty())
      throw ParseError("edge count mismatch: extra data on line " + std::to_string(reader.line));
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Digraph parse_digraph(std::string_view text) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw ParseError("line 1: expected order \"n\"");
  auto header = split_ws(line);
  int n = 0;
  if (header.size() != 1 || !parse_int(header[0], n) || n < 0)
    throw ParseError("line 1: expected order \"n\"");
  Digraph d(n);
  while (reader.next(line)) {
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    int u = 0, v = 0;
    if (tok.size() != 2 || !parse_int(tok[0], u) || !parse_int(tok[1], v))
      throw ParseError("line " + std::to_string(reader.line) + ": expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("line " + std::to_string(reader.line) + ": vertex id out of range");
    if (u == v) throw ParseError("line " + std::to_string(reader.line) + ": loop");
    if (d.has_arc(u, v))
      throw ParseError("line " + std::to_string(reader.line) + ": duplicate arc");
    d.add_arc(u, v);
  }
  return d;
}

std::string write_digraph(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << '\n';
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace dirdom
