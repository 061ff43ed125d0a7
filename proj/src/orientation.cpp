#include "dirdom/orientation.hpp"

#include <stdexcept>
#include <string>

#include "dirdom/errors.hpp"

namespace dirdom {

Orientation::Orientation(Graph g, std::uint64_t direction_word)
    : graph_(std::move(g)), edges_(graph_.edges()), word_(direction_word) {
  int m = static_cast<int>(edges_.size());
  if (m < 64 && (word_ >> m) != 0)
    throw std::invalid_argument("direction word has bits beyond the edge count");
}

Orientation Orientation::from_digraph(const Graph& g, const Digraph& d) {
  if (g.order() != d.order()) throw std::invalid_argument("order mismatch");
  auto edges = g.edges();
  if (static_cast<int>(edges.size()) != d.arc_count())
    throw std::invalid_argument("digraph does not orient exactly the edges of the graph");
  int m = static_cast<int>(edges.size());
  std::uint64_t word = 0;
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edges[static_cast<std::size_t>(e)];
    bool forward = d.has_arc(u, v);
    bool backward = d.has_arc(v, u);
    if (forward == backward)
      throw std::invalid_argument("digraph does not orient exactly the edges of the graph");
    if (backward) word |= bits::bit(m - 1 - e);
  }
  return Orientation(g, word);
}

std::pair<int, int> Orientation::arc(int edge_index) const {
  int m = static_cast<int>(edges_.size());
  auto [u, v] = edges_[static_cast<std::size_t>(edge_index)];
  bool reversed = bits::test(word_, m - 1 - edge_index);
  return reversed ? std::pair{v, u} : std::pair{u, v};
}

Digraph Orientation::to_digraph() const {
  Digraph d(graph_.order());
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    auto [t, h] = arc(e);
    d.add_arc(t, h);
  }
  return d;
}

OrientationStream::OrientationStream(Graph g, std::uint64_t cap)
    : graph_(std::move(g)), edges_(graph_.edges()) {
  int m = static_cast<int>(edges_.size());
  if (m > 62)
    throw ResourceCapError("orientation stream limited to graphs with at most 62 edges");
  count_ = std::uint64_t{1} << m;
  if (count_ > cap)
    throw ResourceCapError("2^" + std::to_string(m) +
                           " orientations exceed the cap of " + std::to_string(cap) +
                           "; raise the cap explicitly or use the sampled mode");
}

Digraph OrientationStream::digraph_at(std::uint64_t rank) const {
  Digraph d(graph_.order());
  write_digraph_at(rank, d);
  return d;
}

void OrientationStream::write_digraph_at(std::uint64_t rank, Digraph& out) const {
  out.reset(graph_.order());
  int m = static_cast<int>(edges_.size());
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edges_[static_cast<std::size_t>(e)];
    if (bits::test(rank, m - 1 - e))
      out.add_arc(v, u);
    else
      out.add_arc(u, v);
  }
}

Orientation OrientationStream::orientation_at(std::uint64_t rank) const {
  if (rank >= count_) throw std::invalid_argument("orientation rank out of range");
  return Orientation(graph_, rank);
}

std::pair<std::uint64_t, std::uint64_t> OrientationStream::prefix_range(std::uint64_t prefix,
                                                                        int prefix_len) const {
  int m = static_cast<int>(edges_.size());
  if (prefix_len < 0 || prefix_len > m) throw std::invalid_argument("prefix length out of range");
  if (prefix_len < 64 && (prefix >> prefix_len) != 0)
    throw std::invalid_argument("prefix has bits beyond its length");
  int rest = m - prefix_len;
  return {prefix << rest, (prefix + 1) << rest};
}

}  // namespace dirdom
