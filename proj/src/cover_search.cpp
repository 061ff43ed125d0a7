#include "cover_search.hpp"

#include <array>
#include <cassert>

#include "dirdom/bits.hpp"

namespace dirdom::detail {
namespace {

using bits::bit;
using bits::popcount;

struct Searcher {
  const CoverInstance& inst;
  std::uint64_t free_mask = 0;         // candidates outside the forced set
  std::array<std::uint64_t, 65> suffix_union{};  // union of covers of free v >= i
  std::array<std::uint64_t, 65> suffix_free{};   // free vertices >= i
  int max_cover = 1;
  std::uint64_t found = 0;

  explicit Searcher(const CoverInstance& i) : inst(i) {
    free_mask = bits::low_mask(inst.n) & ~inst.forced;
    suffix_union[static_cast<std::size_t>(inst.n)] = 0;
    suffix_free[static_cast<std::size_t>(inst.n)] = 0;
    for (int v = inst.n - 1; v >= 0; --v) {
      auto idx = static_cast<std::size_t>(v);
      suffix_union[idx] = suffix_union[idx + 1];
      suffix_free[idx] = suffix_free[idx + 1];
      if (bits::test(free_mask, v)) {
        suffix_union[idx] |= inst.cover[idx];
        suffix_free[idx] |= bit(v);
      }
    }
    for (int v = 0; v < inst.n; ++v)
      if (bits::test(free_mask, v))
        max_cover = std::max(max_cover, popcount(inst.cover[static_cast<std::size_t>(v)]));
  }

  // r == 1: chosen sets are valid once `covered` swallows the universe.
  bool dfs_union(int start, int slots, std::uint64_t chosen, std::uint64_t covered) {
    if ((inst.universe & ~covered) == 0) {
      // Every completion is valid; the lexicographically least one pads with
      // the smallest remaining free vertices.
      std::uint64_t pool = suffix_free[static_cast<std::size_t>(start)];
      if (popcount(pool) < slots) return false;
      while (slots > 0) {
        int v = bits::lowest(pool);
        pool &= pool - 1;
        chosen |= bit(v);
        --slots;
      }
      found = chosen;
      return true;
    }
    if (slots == 0) return false;
    std::uint64_t uncovered = inst.universe & ~covered;
    if (uncovered & ~suffix_union[static_cast<std::size_t>(start)]) return false;
    if (slots * max_cover < popcount(uncovered)) return false;
    std::uint64_t pool = suffix_free[static_cast<std::size_t>(start)];
    if (popcount(pool) < slots) return false;
    while (pool) {
      int v = bits::lowest(pool);
      pool &= pool - 1;
      auto idx = static_cast<std::size_t>(v);
      if (dfs_union(v + 1, slots - 1, chosen | bit(v), covered | inst.cover[idx])) return true;
    }
    return false;
  }

  bool valid_multi(std::uint64_t chosen) const {
    std::uint64_t outside = inst.universe & ~chosen;
    bool ok = true;
    bits::for_each_bit(outside, [&](int u) {
      if (popcount(chosen & inst.indom[static_cast<std::size_t>(u)]) < inst.r) ok = false;
    });
    return ok;
  }

  // r >= 2: validity needs per-vertex dominator counts.
  bool dfs_multi(int start, int slots, std::uint64_t chosen) {
    if (slots == 0) {
      if (!valid_multi(chosen)) return false;
      found = chosen;
      return true;
    }
    std::uint64_t future = suffix_free[static_cast<std::size_t>(start)];
    if (popcount(future) < slots) return false;
    // A vertex that can no longer join S must already be satisfiable by
    // chosen plus everything still selectable.
    std::uint64_t sealed = inst.universe & ~chosen & ~future;
    bool hopeless = false;
    bits::for_each_bit(sealed, [&](int u) {
      auto idx = static_cast<std::size_t>(u);
      if (popcount((chosen | future) & inst.indom[idx]) < inst.r) hopeless = true;
    });
    if (hopeless) return false;
    std::uint64_t pool = future;
    while (pool) {
      int v = bits::lowest(pool);
      pool &= pool - 1;
      if (dfs_multi(v + 1, slots - 1, chosen | bit(v))) return true;
    }
    return false;
  }
};

}  // namespace

std::uint64_t min_cover_set(const CoverInstance& inst) {
  Searcher searcher(inst);
  int base = popcount(inst.forced);
  std::uint64_t forced_cover = 0;
  bits::for_each_bit(inst.forced,
                     [&](int v) { forced_cover |= inst.cover[static_cast<std::size_t>(v)]; });
  int upper = inst.upper_hint >= 0 ? inst.upper_hint : inst.n;
  for (int size = base; size <= upper; ++size) {
    bool ok = inst.r == 1
                  ? searcher.dfs_union(0, size - base, inst.forced, forced_cover)
                  : searcher.dfs_multi(0, size - base, inst.forced);
    if (ok) return searcher.found;
  }
  // S = V is always valid, so the loop terminates before reaching here.
  assert(false && "no dominating set found below the upper bound");
  return bits::low_mask(inst.n);
}

int greedy_cover_size(const CoverInstance& inst) {
  std::uint64_t covered = 0;
  bits::for_each_bit(inst.forced,
                     [&](int v) { covered |= inst.cover[static_cast<std::size_t>(v)]; });
  int size = popcount(inst.forced);
  std::uint64_t chosen = inst.forced;
  while (inst.universe & ~covered) {
    int best = -1, best_gain = -1;
    for (int v = 0; v < inst.n; ++v) {
      if (bits::test(chosen, v)) continue;
      int gain = popcount(inst.cover[static_cast<std::size_t>(v)] & inst.universe & ~covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    covered |= inst.cover[static_cast<std::size_t>(best)];
    chosen |= bit(best);
    ++size;
  }
  return size;
}

}  // namespace dirdom::detail
