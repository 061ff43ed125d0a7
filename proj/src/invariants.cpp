#include "dirdom/invariants.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cover_search.hpp"
#include "dirdom/errors.hpp"
#include "maxflow.hpp"

namespace dirdom {
namespace {

using bits::bit;
using bits::popcount;

std::uint64_t above(int v) { return ~bits::low_mask(v + 1); }

struct MisSolver {
  const Graph& g;
  int best = 0;

  void expand(std::uint64_t cand, int current) {
    // Vertices isolated inside the candidate set always join.
    for (;;) {
      bool changed = false;
      std::uint64_t scan = cand;
      while (scan) {
        int v = bits::lowest(scan);
        scan &= scan - 1;
        if ((g.neighbors(v) & cand) == 0) {
          cand &= ~bit(v);
          ++current;
          changed = true;
        }
      }
      if (!changed) break;
    }
    if (current + popcount(cand) <= best) return;
    if (!cand) {
      best = std::max(best, current);
      return;
    }
    // Branch on a densest vertex: taking it removes the most candidates.
    int pivot = -1, pivot_deg = -1;
    std::uint64_t scan = cand;
    while (scan) {
      int v = bits::lowest(scan);
      scan &= scan - 1;
      int deg = popcount(g.neighbors(v) & cand);
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = v;
      }
    }
    expand(cand & ~g.closed_neighbors(pivot), current + 1);
    if (current + popcount(cand) - 1 > best) expand(cand & ~bit(pivot), current);
  }
};

int matching_value(const Graph& g, std::uint64_t active,
                   std::unordered_map<std::uint64_t, int>& memo) {
  // Least vertex with a neighbor inside `active`.
  int v = -1;
  std::uint64_t scan = active;
  while (scan) {
    int u = bits::lowest(scan);
    scan &= scan - 1;
    if (g.neighbors(u) & active) {
      v = u;
      break;
    }
  }
  if (v < 0) return 0;
  if (auto it = memo.find(active); it != memo.end()) return it->second;
  int best = matching_value(g, active & ~bit(v), memo);
  bits::for_each_bit(g.neighbors(v) & active, [&](int u) {
    best = std::max(best, 1 + matching_value(g, active & ~bit(v) & ~bit(u), memo));
  });
  memo.emplace(active, best);
  return best;
}

struct ColoringSolver {
  const Graph& g;
  int k;
  std::array<std::uint64_t, 17> classes{};
  int used = 0;

  bool assign(int v) {
    if (v == g.order()) return true;
    int limit = std::min(k - 1, used);
    for (int c = 0; c <= limit; ++c) {
      if (classes[static_cast<std::size_t>(c)] & g.neighbors(v)) continue;
      classes[static_cast<std::size_t>(c)] |= bit(v);
      int prev_used = used;
      used = std::max(used, c + 1);
      if (assign(v + 1)) return true;
      used = prev_used;
      classes[static_cast<std::size_t>(c)] &= ~bit(v);
    }
    return false;
  }
};

int greedy_clique_size(const Graph& g) {
  std::uint64_t cand = g.vertices();
  std::uint64_t clique = 0;
  while (cand) {
    int pick = -1, deg = -1;
    bits::for_each_bit(cand, [&](int v) {
      int d = popcount(g.neighbors(v) & cand);
      if (d > deg) {
        deg = d;
        pick = v;
      }
    });
    clique |= bit(pick);
    cand &= g.neighbors(pick);
  }
  return popcount(clique);
}

}  // namespace

int independence_number_in(const Graph& g, std::uint64_t active) {
  MisSolver solver{g};
  solver.expand(active, 0);
  return solver.best;
}

std::uint64_t max_independent_set_in(const Graph& g, std::uint64_t active) {
  int need = independence_number_in(g, active);
  std::uint64_t cand = active, chosen = 0;
  for (int v = 0; v < g.order() && need > 0; ++v) {
    if (!bits::test(cand, v)) continue;
    std::uint64_t rest = cand & ~g.closed_neighbors(v) & above(v);
    if (1 + independence_number_in(g, rest) == need) {
      chosen |= bit(v);
      --need;
      cand = rest;
    } else {
      cand &= ~bit(v);
    }
  }
  return chosen;
}

std::uint64_t lex_independent_subset(const Graph& g, std::uint64_t active, int k) {
  std::uint64_t cand = active, chosen = 0;
  int need = k;
  for (int v = 0; v < g.order() && need > 0; ++v) {
    if (!bits::test(cand, v)) continue;
    std::uint64_t rest = cand & ~g.closed_neighbors(v) & above(v);
    if (1 + independence_number_in(g, rest) >= need) {
      chosen |= bit(v);
      --need;
      cand = rest;
    } else {
      cand &= ~bit(v);
    }
  }
  if (need != 0) throw std::logic_error("no independent subset of the requested size");
  return chosen;
}

WitnessedSet independence_number(const Graph& g) {
  std::uint64_t set = max_independent_set_in(g, g.vertices());
  return {popcount(set), bits::to_vector(set)};
}

WitnessedMatching matching_number(const Graph& g) {
  if (g.order() > kMatchingCap)
    throw ResourceCapError("matching solver capped at n <= " + std::to_string(kMatchingCap));
  std::unordered_map<std::uint64_t, int> memo;
  int target = matching_value(g, g.vertices(), memo);
  WitnessedMatching result;
  result.value = target;
  std::uint64_t active = g.vertices();
  int need = target;
  for (auto [u, v] : g.edges()) {
    if (need == 0) break;
    if (!bits::test(active, u) || !bits::test(active, v)) continue;
    std::uint64_t rest = active & ~bit(u) & ~bit(v);
    if (matching_value(g, rest, memo) == need - 1) {
      result.witness.emplace_back(u, v);
      active = rest;
      --need;
    }
  }
  return result;
}

WitnessedColoring chromatic_number(const Graph& g) {
  if (g.order() > kChromaticCap)
    throw ResourceCapError("chromatic solver capped at n <= " + std::to_string(kChromaticCap));
  WitnessedColoring result;
  if (g.order() == 0) return result;
  for (int k = std::max(1, greedy_clique_size(g)); k <= g.order(); ++k) {
    ColoringSolver solver{g, k};
    if (!solver.assign(0)) continue;
    result.value = solver.used;
    for (int c = 0; c < solver.used; ++c)
      result.classes.push_back(bits::to_vector(solver.classes[static_cast<std::size_t>(c)]));
    return result;
  }
  throw std::logic_error("coloring search failed");
}

WitnessedSet domination_number(const Graph& g) {
  if (g.order() > kDominationCap)
    throw ResourceCapError("domination solver capped at n <= " + std::to_string(kDominationCap));
  int n = g.order();
  std::array<std::uint64_t, 64> cover{}, indom{};
  for (int v = 0; v < n; ++v) {
    cover[static_cast<std::size_t>(v)] = g.closed_neighbors(v);
    indom[static_cast<std::size_t>(v)] = g.neighbors(v);
  }
  detail::CoverInstance inst{n, g.vertices(), cover.data(), indom.data(), 1, 0, -1};
  // Isolated vertices dominate only themselves.
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) inst.forced |= bit(v);
  inst.upper_hint = detail::greedy_cover_size(inst);
  std::uint64_t set = detail::min_cover_set(inst);
  return {popcount(set), bits::to_vector(set)};
}

WitnessedSet covering_number(const Graph& g) {
  std::uint64_t independent = max_independent_set_in(g, g.vertices());
  std::uint64_t cover = g.vertices() & ~independent;
  for (auto [u, v] : g.edges())
    if (!bits::test(cover, u) && !bits::test(cover, v))
      throw std::logic_error("covering witness misses an edge");
  return {popcount(cover), bits::to_vector(cover)};
}

Rational caro_wei(const Graph& g) {
  Rational sum = 0;
  for (int v = 0; v < g.order(); ++v) sum += Rational(1, g.degree(v) + 1);
  return sum;
}

std::optional<StarWitness> find_induced_star(const Graph& g, int m) {
  if (m < 2) throw std::invalid_argument("induced stars need at least 2 leaves");
  for (int center = 0; center < g.order(); ++center) {
    std::uint64_t hood = g.neighbors(center);
    if (popcount(hood) < m) continue;
    if (independence_number_in(g, hood) < m) continue;
    std::uint64_t leaves = lex_independent_subset(g, hood, m);
    return StarWitness{center, bits::to_vector(leaves)};
  }
  return std::nullopt;
}

bool is_k1m_free(const Graph& g, int m) { return !find_induced_star(g, m).has_value(); }

std::vector<int> degeneracy_order(const Graph& g) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.order()));
  std::uint64_t remaining = g.vertices();
  while (remaining) {
    int pick = -1, deg = -1;
    bits::for_each_bit(remaining, [&](int v) {
      int d = popcount(g.neighbors(v) & remaining);
      if (pick < 0 || d < deg) {
        deg = d;
        pick = v;
      }
    });
    order.push_back(pick);
    remaining &= ~bit(pick);
  }
  return order;
}

int degeneracy(const Graph& g) {
  int worst = 0;
  std::uint64_t remaining = g.vertices();
  while (remaining) {
    int pick = -1, deg = -1;
    bits::for_each_bit(remaining, [&](int v) {
      int d = popcount(g.neighbors(v) & remaining);
      if (pick < 0 || d < deg) {
        deg = d;
        pick = v;
      }
    });
    worst = std::max(worst, deg);
    remaining &= ~bit(pick);
  }
  return worst;
}

bool is_complement_d_degenerate(const Graph& g, int d) {
  if (d < 0) throw std::invalid_argument("degeneracy bound must be non-negative");
  return degeneracy(g.complement()) <= d;
}

MinMaxOutDegree min_max_out_degree(const Graph& g) {
  int n = g.order();
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());

  // Network: source -> edge nodes -> endpoint vertices -> sink. An edge's
  // unit of flow picks the endpoint that becomes the arc's tail.
  auto feasible = [&](int k, std::uint64_t* word_out) {
    detail::MaxFlow net(2 + m + n);
    int source = 0, sink = 1 + m + n;
    std::vector<int> to_min(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
      auto [u, v] = edges[static_cast<std::size_t>(e)];
      net.add_edge(source, 1 + e, 1);
      to_min[static_cast<std::size_t>(e)] = net.add_edge(1 + e, 1 + m + u, 1);
      net.add_edge(1 + e, 1 + m + v, 1);
    }
    for (int v = 0; v < n; ++v) net.add_edge(1 + m + v, sink, k);
    if (net.max_flow(source, sink) != m) return false;
    if (word_out) {
      std::uint64_t word = 0;
      for (int e = 0; e < m; ++e)
        if (net.flow_on(to_min[static_cast<std::size_t>(e)]) == 0)
          word |= bit(m - 1 - e);  // tail is the max endpoint
      *word_out = word;
    }
    return true;
  };

  int lo = 0, hi = g.max_degree();
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (feasible(mid, nullptr))
      hi = mid;
    else
      lo = mid + 1;
  }
  std::uint64_t word = 0;
  feasible(lo, &word);
  return {lo, Orientation(g, word)};
}

}  // namespace dirdom
