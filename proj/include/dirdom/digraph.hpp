#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dirdom/bits.hpp"
#include "dirdom/graph.hpp"

namespace dirdom {

// Loopless directed graph. Antiparallel arc pairs are allowed; orientations
// (antisymmetric digraphs over an undirected graph) are a separate type.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

  int order() const { return n_; }
  int arc_count() const { return a_; }

  bool has_arc(int u, int v) const { return bits::test(out_[static_cast<std::size_t>(u)], v); }
  void add_arc(int u, int v);

  std::uint64_t out_neighbors(int v) const { return out_[static_cast<std::size_t>(v)]; }
  std::uint64_t in_neighbors(int v) const { return in_[static_cast<std::size_t>(v)]; }
  std::uint64_t closed_out_neighbors(int v) const { return out_neighbors(v) | bits::bit(v); }
  std::uint64_t closed_in_neighbors(int v) const { return in_neighbors(v) | bits::bit(v); }
  std::uint64_t vertices() const { return bits::low_mask(n_); }

  int out_degree(int v) const { return bits::popcount(out_neighbors(v)); }
  int in_degree(int v) const { return bits::popcount(in_neighbors(v)); }
  int max_out_degree() const;
  int max_in_degree() const;

  // Arcs as (tail, head) in lexicographic order.
  std::vector<std::pair<int, int>> arcs() const;

  Digraph induced(std::uint64_t mask) const;
  Digraph induced(std::span<const int> vertex_ids) const;

  // Undirected shadow: u,v adjacent when at least one arc joins them.
  Graph underlying() const;

  // Reinitialize in place; keeps allocated storage for enumeration loops.
  void reset(int n);

  bool operator==(const Digraph&) const = default;

 private:
  int n_ = 0;
  int a_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

}  // namespace dirdom
