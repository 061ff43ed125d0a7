#pragma once

#include <cstdint>

namespace dirdom::detail {

// Exact minimum domination-style search over bitset-encoded vertex sets.
//
// Find the smallest S with: every u in universe \ S has at least r dominators
// in S, where v dominates u when bit u of cover[v] is set. cover[v] always
// contains v itself; indom[u] lists the potential dominators of u (excluding
// u). Vertices in `forced` are part of every candidate S.
//
// Enumerates candidate sets in increasing cardinality and, within one
// cardinality, in lexicographic set order, so the returned witness is the
// lexicographically least optimal set.
struct CoverInstance {
  int n = 0;
  std::uint64_t universe = 0;
  const std::uint64_t* cover = nullptr;
  const std::uint64_t* indom = nullptr;
  int r = 1;
  std::uint64_t forced = 0;
  int upper_hint = -1;  // size of a known feasible set, -1 when unknown
};

std::uint64_t min_cover_set(const CoverInstance& inst);

// Size of the greedy incumbent: repeatedly take the vertex covering the most
// still-uncovered vertices (ties to the least id). Only meaningful for r == 1.
int greedy_cover_size(const CoverInstance& inst);

}  // namespace dirdom::detail
