#pragma once

#include <vector>

namespace dirdom::detail {

// Small Dinic max-flow on integer capacities; enough for the edge-assignment
// networks used by the orientation feasibility test.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count);

  // Returns the id of the forward edge.
  int add_edge(int from, int to, int capacity);

  int max_flow(int source, int sink);

  int flow_on(int edge_id) const;

 private:
  struct Edge {
    int to;
    int cap;
    int rev;  // index of the reverse edge in adj_[to]
  };

  bool bfs(int source, int sink);
  int dfs(int v, int sink, int pushed);

  std::vector<std::vector<Edge>> adj_;
  std::vector<std::pair<int, int>> edge_ref_;  // edge id -> (node, slot)
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace dirdom::detail
