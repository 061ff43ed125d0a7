#include "dirdom/graph.hpp"

#include <stdexcept>

#include "dirdom/errors.hpp"

namespace dirdom {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  if (n > kMaxOrder) throw ResourceCapError("graph order exceeds the 64-vertex cap");
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex id out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (adjacent(u, v)) return;
  adj_[static_cast<std::size_t>(u)] |= bits::bit(v);
  adj_[static_cast<std::size_t>(v)] |= bits::bit(u);
  ++m_;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

double Graph::average_degree() const {
  if (n_ == 0) return 0.0;
  return 2.0 * m_ / n_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = neighbors(u) & ~bits::low_mask(u + 1);
    bits::for_each_bit(higher, [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    g.adj_[static_cast<std::size_t>(u)] = ~adj_[static_cast<std::size_t>(u)] & vertices() & ~bits::bit(u);
  g.m_ = n_ * (n_ - 1) / 2 - m_;
  return g;
}

Graph Graph::induced(std::uint64_t mask) const {
  if (mask & ~vertices()) throw std::invalid_argument("vertex id out of range");
  std::vector<int> ids = bits::to_vector(mask);
  Graph g(static_cast<int>(ids.size()));
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      if (adjacent(ids[a], ids[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

Graph Graph::induced(std::span<const int> vertex_ids) const {
  std::uint64_t mask = 0;
  for (int v : vertex_ids) {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    mask |= bits::bit(v);
  }
  return induced(mask);
}

}  // namespace dirdom
