#include "dirdom/digraph.hpp"

#include <stdexcept>

#include "dirdom/errors.hpp"

namespace dirdom {

Digraph::Digraph(int n) {
  if (n < 0) throw std::invalid_argument("digraph order must be non-negative");
  if (n > Graph::kMaxOrder) throw ResourceCapError("digraph order exceeds the 64-vertex cap");
  n_ = n;
  out_.assign(static_cast<std::size_t>(n), 0);
  in_.assign(static_cast<std::size_t>(n), 0);
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

void Digraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex id out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (has_arc(u, v)) return;
  out_[static_cast<std::size_t>(u)] |= bits::bit(v);
  in_[static_cast<std::size_t>(v)] |= bits::bit(u);
  ++a_;
}

int Digraph::max_out_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, out_degree(v));
  return best;
}

int Digraph::max_in_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, in_degree(v));
  return best;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(a_));
  for (int u = 0; u < n_; ++u)
    bits::for_each_bit(out_neighbors(u), [&](int v) { out.emplace_back(u, v); });
  return out;
}

Digraph Digraph::induced(std::uint64_t mask) const {
  if (mask & ~vertices()) throw std::invalid_argument("vertex id out of range");
  std::vector<int> ids = bits::to_vector(mask);
  Digraph d(static_cast<int>(ids.size()));
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = 0; b < ids.size(); ++b)
      if (a != b && has_arc(ids[a], ids[b])) d.add_arc(static_cast<int>(a), static_cast<int>(b));
  return d;
}

Digraph Digraph::induced(std::span<const int> vertex_ids) const {
  std::uint64_t mask = 0;
  for (int v : vertex_ids) {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    mask |= bits::bit(v);
  }
  return induced(mask);
}

Graph Digraph::underlying() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    bits::for_each_bit(out_neighbors(u), [&](int v) { g.add_edge(u, v); });
  return g;
}

void Digraph::reset(int n) {
  n_ = n;
  a_ = 0;
  out_.assign(static_cast<std::size_t>(n), 0);
  in_.assign(static_cast<std::size_t>(n), 0);
}

}  // namespace dirdom
