#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dirdom/bits.hpp"

namespace dirdom {

// Loopless undirected graph on vertex ids 0..n-1. Orders up to 64 are
// supported so every vertex set fits in one machine word.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const { return bits::test(adj_[static_cast<std::size_t>(u)], v); }
  void add_edge(int u, int v);

  std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::uint64_t closed_neighbors(int v) const { return neighbors(v) | bits::bit(v); }
  std::uint64_t vertices() const { return bits::low_mask(n_); }

  int degree(int v) const { return bits::popcount(neighbors(v)); }
  int min_degree() const;
  int max_degree() const;
  double average_degree() const;  // 2m/n, 0 for the order-0 graph

  // Edges as (min,max) pairs in lexicographic order. This ordering also fixes
  // the bit layout of orientation direction words.
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;

  // Induced subgraph with vertices relabeled 0..|S|-1 in increasing original id.
  Graph induced(std::uint64_t mask) const;
  Graph induced(std::span<const int> vertex_ids) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

}  // namespace dirdom
