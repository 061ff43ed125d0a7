#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dirdom/digraph.hpp"
#include "dirdom/graph.hpp"

namespace dirdom {

// One direction chosen for every edge of an undirected graph.
//
// Directions are packed into a single word over the sorted (min,max) edge
// list: bit (m-1-e) of the word is 0 when edge e runs low id -> high id and 1
// otherwise. Under this packing the numeric word value equals the rank of the
// orientation in the lexicographic order of its direction vector, which is
// the enumeration order of OrientationStream.
class Orientation {
 public:
  Orientation(Graph g, std::uint64_t direction_word);

  // Checks that the digraph orients exactly the edges of g.
  static Orientation from_digraph(const Graph& g, const Digraph& d);

  const Graph& underlying() const { return graph_; }
  std::uint64_t direction_word() const { return word_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::pair<int, int> arc(int edge_index) const;
  Digraph to_digraph() const;

 private:
  Graph graph_;
  std::vector<std::pair<int, int>> edges_;
  std::uint64_t word_;
};

inline constexpr std::uint64_t kDefaultOrientationCap = std::uint64_t{1} << 22;

// All 2^m orientations of a graph in lexicographic order of the direction
// vector. The stream is restartable (any rank can be materialized directly)
// and splittable: fixing a direction-vector prefix selects a contiguous rank
// range, which is how sweeps are divided between workers.
class OrientationStream {
 public:
  explicit OrientationStream(Graph g, std::uint64_t cap = kDefaultOrientationCap);

  std::uint64_t count() const { return count_; }
  const Graph& graph() const { return graph_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  Digraph digraph_at(std::uint64_t rank) const;
  void write_digraph_at(std::uint64_t rank, Digraph& out) const;
  Orientation orientation_at(std::uint64_t rank) const;

  // Ranks whose direction vector starts with the low `prefix_len` bits of
  // `prefix` (most significant direction bit first).
  std::pair<std::uint64_t, std::uint64_t> prefix_range(std::uint64_t prefix, int prefix_len) const;

 private:
  Graph graph_;
  std::vector<std::pair<int, int>> edges_;
  std::uint64_t count_ = 1;
};

}  // namespace dirdom
