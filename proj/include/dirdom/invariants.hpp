#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dirdom/graph.hpp"
#include "dirdom/orientation.hpp"

namespace dirdom {

// Exact rational values (no floating point) for the degree-sum bounds.
using Rational = boost::multiprecision::cpp_rational;

// Caps for the exact solvers. Exceeding one raises ResourceCapError instead
// of silently taking forever.
inline constexpr int kChromaticCap = 16;
inline constexpr int kDominationCap = 24;
inline constexpr int kMatchingCap = 20;

struct WitnessedSet {
  int value = 0;
  std::vector<int> witness;  // ascending vertex ids
};

struct WitnessedMatching {
  int value = 0;
  std::vector<std::pair<int, int>> witness;  // (min,max) pairs, sorted
};

struct WitnessedColoring {
  int value = 0;
  std::vector<std::vector<int>> classes;  // ordered by least member
};

// Maximum independent set; ties broken to the lexicographically least witness.
WitnessedSet independence_number(const Graph& g);

// Value-only variants restricted to an induced vertex mask.
int independence_number_in(const Graph& g, std::uint64_t active);
std::uint64_t max_independent_set_in(const Graph& g, std::uint64_t active);
// Lexicographically least independent subset of `active` of size k, assuming
// one exists.
std::uint64_t lex_independent_subset(const Graph& g, std::uint64_t active, int k);

WitnessedMatching matching_number(const Graph& g);
WitnessedColoring chromatic_number(const Graph& g);
WitnessedSet domination_number(const Graph& g);

// n - alpha with the complement of the independence witness; validated
// directly against the covering predicate.
WitnessedSet covering_number(const Graph& g);

// Sum of 1/(d(v)+1), exactly.
Rational caro_wei(const Graph& g);

struct StarWitness {
  int center = -1;
  std::vector<int> leaves;
};

// Least-center induced K_{1,m}, if any; m >= 2.
std::optional<StarWitness> find_induced_star(const Graph& g, int m);
bool is_k1m_free(const Graph& g, int m);

// Min-degree removal order, ties to the least vertex id.
std::vector<int> degeneracy_order(const Graph& g);
int degeneracy(const Graph& g);
bool is_complement_d_degenerate(const Graph& g, int d);

struct MinMaxOutDegree {
  int value = 0;
  Orientation orientation;
};

// Minimum over all orientations of the maximum out-degree, with an
// orientation attaining it. Binary search on k over a flow feasibility test;
// an orientation with max out-degree <= k exists iff no subgraph is denser
// than k edges per vertex.
MinMaxOutDegree min_max_out_degree(const Graph& g);

}  // namespace dirdom
