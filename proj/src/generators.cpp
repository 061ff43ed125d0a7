#include "dirdom/generators.hpp"

#include <stdexcept>

namespace dirdom {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw std::invalid_argument("leaf count must be non-negative");
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph random_gnp(int n, double p, Seed seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0,1]");
  SplitMix64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) g.add_edge(u, v);
  return g;
}

Digraph random_digraph(int n, double p, Seed seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("arc probability must be in [0,1]");
  SplitMix64 rng(seed);
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.next_unit() < p) d.add_arc(u, v);
  return d;
}

Digraph random_tournament(int n, Seed seed) {
  SplitMix64 rng(seed);
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_bool())
        d.add_arc(v, u);
      else
        d.add_arc(u, v);
    }
  return d;
}

Digraph directed_cycle(int n) {
  if (n < 1) throw std::invalid_argument("directed cycle needs at least 1 vertex");
  Digraph d(n);
  if (n >= 2)
    for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
  return d;
}

Digraph transitive_tournament(int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
  return d;
}

Digraph qr_tournament_7() {
  Digraph d(7);
  for (int i = 0; i < 7; ++i)
    for (int delta : {1, 2, 4}) d.add_arc(i, (i + delta) % 7);
  return d;
}

}  // namespace dirdom
