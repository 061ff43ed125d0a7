#include "maxflow.hpp"

#include <algorithm>
#include <deque>

namespace dirdom::detail {

MaxFlow::MaxFlow(int node_count)
    : adj_(static_cast<std::size_t>(node_count)),
      level_(static_cast<std::size_t>(node_count)),
      iter_(static_cast<std::size_t>(node_count)) {}

int MaxFlow::add_edge(int from, int to, int capacity) {
  auto fu = static_cast<std::size_t>(from);
  auto tu = static_cast<std::size_t>(to);
  adj_[fu].push_back({to, capacity, static_cast<int>(adj_[tu].size())});
  adj_[tu].push_back({from, 0, static_cast<int>(adj_[fu].size() - 1)});
  edge_ref_.emplace_back(from, static_cast<int>(adj_[fu].size() - 1));
  return static_cast<int>(edge_ref_.size() - 1);
}

bool MaxFlow::bfs(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::deque<int> queue{source};
  level_[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const Edge& e : adj_[static_cast<std::size_t>(v)]) {
      if (e.cap > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
        level_[static_cast<std::size_t>(e.to)] = level_[static_cast<std::size_t>(v)] + 1;
        queue.push_back(e.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink)] >= 0;
}

int MaxFlow::dfs(int v, int sink, int pushed) {
  if (v == sink) return pushed;
  auto vu = static_cast<std::size_t>(v);
  for (int& i = iter_[vu]; i < static_cast<int>(adj_[vu].size()); ++i) {
    Edge& e = adj_[vu][static_cast<std::size_t>(i)];
    if (e.cap <= 0 || level_[static_cast<std::size_t>(e.to)] != level_[vu] + 1) continue;
    int got = dfs(e.to, sink, std::min(pushed, e.cap));
    if (got > 0) {
      e.cap -= got;
      adj_[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)].cap += got;
      return got;
    }
  }
  return 0;
}

int MaxFlow::max_flow(int source, int sink) {
  int total = 0;
  while (bfs(source, sink)) {
    std::fill(iter_.begin(), iter_.end(), 0);
    while (int pushed = dfs(source, sink, 1 << 30)) total += pushed;
  }
  return total;
}

int MaxFlow::flow_on(int edge_id) const {
  auto [node, slot] = edge_ref_[static_cast<std::size_t>(edge_id)];
  const Edge& e = adj_[static_cast<std::size_t>(node)][static_cast<std::size_t>(slot)];
  return adj_[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)].cap;
}

}  // namespace dirdom::detail
