#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dirdom/digraph.hpp"
#include "dirdom/graph.hpp"
#include "dirdom/orientation.hpp"
#include "dirdom/rng.hpp"

namespace dirdom {

inline constexpr int kGammaOrderCap = 24;

// r = required dominators per outside vertex, d = distance radius. (1,1) is
// plain directed domination; a vertex u outside S is covered when at least r
// vertices of S reach u along directed paths of length at most d.
struct DominationQuery {
  int r = 1;
  int d = 1;
};

void validate_query(const DominationQuery& q);

struct DirectedDominationResult {
  int value = 0;
  std::vector<int> witness;  // ascending ids; lexicographically least optimum
  DominationQuery query;
};

bool is_dds(const Digraph& dg, std::uint64_t candidate, DominationQuery q = {});
bool is_dds(const Digraph& dg, std::span<const int> candidate, DominationQuery q = {});

// Exact minimum directed (r,d)-dominating set. Candidate sets are enumerated
// in increasing cardinality with forced-vertex preprocessing (a vertex that
// cannot collect r dominators must be in S) and a greedy peeling incumbent.
DirectedDominationResult gamma(const Digraph& dg, DominationQuery q = {});
int gamma_value(const Digraph& dg, DominationQuery q = {});

struct GammaDOptions {
  std::uint64_t max_orientations = kDefaultOrientationCap;
  int workers = 1;
};

struct GammaDResult {
  int value = 0;
  std::uint64_t orientation_rank = 0;  // first maximizer in stream order
  Orientation orientation;
};

// Maximum of gamma over every orientation of g, with the first orientation
// (in stream order) attaining it. Splitting across workers returns the same
// (value, rank) as the serial sweep.
GammaDResult gamma_d(const Graph& g, DominationQuery q = {}, const GammaDOptions& opt = {});

struct SampledGammaD {
  int lower_bound = 0;  // max gamma over the sampled orientations only
  int best_sample = 0;
  Seed best_sample_seed = 0;
  int samples = 0;
};

// Monte-Carlo stand-in when 2^m is infeasible; the result is a lower bound
// on the true maximum, never an exact value.
SampledGammaD gamma_d_sampled(const Graph& g, DominationQuery q, int samples, Seed seed);

// Stage s removes an optimal directed dominating set of what is left; the
// union of the r stages is a valid directed r-dominating set.
std::vector<int> stacked_dds(const Digraph& dg, int r);

// Independent set within directed distance 2 of everything, by the
// constructive recursion: pick the least vertex v, recurse on the digraph
// minus v's closed out-neighborhood, and keep v unless the recursive set
// already sends an arc to it.
std::vector<int> semi_kernel(const Digraph& dg);

// Orient every edge leaving the lexicographically least maximum independent
// set outward, everything else low id -> high id. Vertices of that set end
// with in-degree 0, so they sit in every distance dominating set.
Orientation adversarial_orientation(const Graph& g);

}  // namespace dirdom
