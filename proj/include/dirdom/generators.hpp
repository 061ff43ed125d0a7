#pragma once

#include "dirdom/digraph.hpp"
#include "dirdom/graph.hpp"
#include "dirdom/rng.hpp"

namespace dirdom {

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);
Graph star_graph(int leaves);  // K_{1,m}: center 0, leaves 1..m

// Each pair independently an edge with probability p.
Graph random_gnp(int n, double p, Seed seed);

// Each ordered pair independently an arc with probability p (2-cycles allowed).
Digraph random_digraph(int n, double p, Seed seed);

// Each pair oriented by a fair coin; equal seeds give arc-identical digraphs.
Digraph random_tournament(int n, Seed seed);

Digraph directed_cycle(int n);         // n >= 1; arcs v -> v+1 mod n
Digraph transitive_tournament(int n);  // arcs low -> high

// Order-7 quadratic-residue tournament: arc i -> j iff (j-i) mod 7 in {1,2,4}.
// Every pair of vertices has a common in-neighbor.
Digraph qr_tournament_7();

}  // namespace dirdom
