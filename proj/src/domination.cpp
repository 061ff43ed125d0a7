#include "dirdom/domination.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "cover_search.hpp"
#include "dirdom/errors.hpp"
#include "dirdom/invariants.hpp"

namespace dirdom {
namespace {

using bits::bit;
using bits::popcount;

// Reusable per-query buffers so orientation sweeps do not allocate.
struct Workspace {
  std::array<std::uint64_t, 64> cover{};  // cover[v]: v plus vertices reached within d
  std::array<std::uint64_t, 64> indom{};  // indom[u]: sources reaching u within d
};

void build_reach(const Digraph& dg, const DominationQuery& q, Workspace& ws) {
  int n = dg.order();
  if (q.d == 1) {
    for (int v = 0; v < n; ++v)
      ws.cover[static_cast<std::size_t>(v)] = dg.closed_out_neighbors(v);
  } else {
    for (int v = 0; v < n; ++v) {
      std::uint64_t reach = bit(v), frontier = bit(v);
      for (int step = 0; step < q.d && frontier; ++step) {
        std::uint64_t next = 0;
        bits::for_each_bit(frontier, [&](int x) { next |= dg.out_neighbors(x); });
        frontier = next & ~reach;
        reach |= next;
      }
      ws.cover[static_cast<std::size_t>(v)] = reach;
    }
  }
  for (int u = 0; u < n; ++u) ws.indom[static_cast<std::size_t>(u)] = 0;
  for (int v = 0; v < n; ++v)
    bits::for_each_bit(ws.cover[static_cast<std::size_t>(v)] & ~bit(v),
                       [&](int u) { ws.indom[static_cast<std::size_t>(u)] |= bit(v); });
}

bool is_dds_with(const Workspace& ws, int n, std::uint64_t candidate, int r) {
  std::uint64_t full = bits::low_mask(n);
  if (r == 1) {
    std::uint64_t covered = 0;
    bits::for_each_bit(candidate, [&](int v) { covered |= ws.cover[static_cast<std::size_t>(v)]; });
    return (full & ~(covered | candidate)) == 0;
  }
  bool ok = true;
  bits::for_each_bit(full & ~candidate, [&](int u) {
    if (popcount(candidate & ws.indom[static_cast<std::size_t>(u)]) < r) ok = false;
  });
  return ok;
}

std::uint64_t solve_gamma(const Digraph& dg, const DominationQuery& q, Workspace& ws) {
  int n = dg.order();
  build_reach(dg, q, ws);
  detail::CoverInstance inst{n,          bits::low_mask(n), ws.cover.data(),
                             ws.indom.data(), q.r,           0,
                             -1};
  for (int u = 0; u < n; ++u)
    if (popcount(ws.indom[static_cast<std::size_t>(u)]) < q.r) inst.forced |= bit(u);
  if (q.r == 1) inst.upper_hint = detail::greedy_cover_size(inst);
  return detail::min_cover_set(inst);
}

void check_order(const Digraph& dg) {
  if (dg.order() > kGammaOrderCap)
    throw ResourceCapError("exact directed domination capped at n <= " +
                           std::to_string(kGammaOrderCap));
}

// Upper bound on gamma(D, q) valid for every orientation D of g; used for an
// early exit once the sweep attains it.
int orientation_gamma_bound(const Graph& g, const DominationQuery& q) {
  int n = g.order();
  if (n > 12) return n;
  if (q.r == 1 && q.d == 1) return n - matching_number(g).value;
  if (q.r == 1 && q.d >= 2) return independence_number(g).value;
  return n;
}

}  // namespace

void validate_query(const DominationQuery& q) {
  if (q.r < 1) throw std::invalid_argument("domination multiplicity r must be >= 1");
  if (q.d < 1) throw std::invalid_argument("domination distance d must be >= 1");
}

bool is_dds(const Digraph& dg, std::uint64_t candidate, DominationQuery q) {
  validate_query(q);
  if (candidate & ~dg.vertices()) throw std::invalid_argument("vertex id out of range");
  Workspace ws;
  build_reach(dg, q, ws);
  return is_dds_with(ws, dg.order(), candidate, q.r);
}

bool is_dds(const Digraph& dg, std::span<const int> candidate, DominationQuery q) {
  for (int v : candidate)
    if (v < 0 || v >= dg.order()) throw std::invalid_argument("vertex id out of range");
  return is_dds(dg, bits::from_vector(candidate), q);
}

DirectedDominationResult gamma(const Digraph& dg, DominationQuery q) {
  validate_query(q);
  check_order(dg);
  Workspace ws;
  std::uint64_t set = solve_gamma(dg, q, ws);
  return {popcount(set), bits::to_vector(set), q};
}

int gamma_value(const Digraph& dg, DominationQuery q) {
  validate_query(q);
  check_order(dg);
  Workspace ws;
  return popcount(solve_gamma(dg, q, ws));
}

GammaDResult gamma_d(const Graph& g, DominationQuery q, const GammaDOptions& opt) {
  validate_query(q);
  if (g.order() > kGammaOrderCap)
    throw ResourceCapError("exact directed domination capped at n <= " +
                           std::to_string(kGammaOrderCap));
  OrientationStream stream(g, opt.max_orientations);
  const std::uint64_t total = stream.count();
  const int early_exit = orientation_gamma_bound(g, q);

  struct Best {
    int value = -1;
    std::uint64_t rank = 0;
    void absorb(int v, std::uint64_t r) {
      if (v > value || (v == value && r < rank)) {
        value = v;
        rank = r;
      }
    }
  };

  int workers = std::max(1, opt.workers);
  Best best;
  if (workers == 1 || total < 4096) {
    Workspace ws;
    Digraph scratch;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
      stream.write_digraph_at(rank, scratch);
      int value = popcount(solve_gamma(scratch, q, ws));
      if (value > best.value) {
        best.value = value;
        best.rank = rank;
        if (value >= early_exit) break;
      }
    }
  } else {
    constexpr std::uint64_t kChunk = 2048;
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<bool> stop{false};
    std::vector<Best> partial(static_cast<std::size_t>(workers));
    auto run = [&](int id) {
      Workspace ws;
      Digraph scratch;
      Best local;
      for (;;) {
        std::uint64_t begin = next_chunk.fetch_add(kChunk);
        if (begin >= total) break;
        // Chunks are claimed in ascending order, so a chunk claimed after the
        // stop flag went up lies entirely above the stopping rank.
        if (stop.load(std::memory_order_relaxed)) break;
        std::uint64_t end = std::min(total, begin + kChunk);
        for (std::uint64_t rank = begin; rank < end; ++rank) {
          stream.write_digraph_at(rank, scratch);
          int value = popcount(solve_gamma(scratch, q, ws));
          if (value > local.value) {
            local.value = value;
            local.rank = rank;
            if (value >= early_exit) {
              stop.store(true, std::memory_order_relaxed);
              break;
            }
          }
        }
        if (local.value >= early_exit) break;
      }
      partial[static_cast<std::size_t>(id)] = local;
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(run, i);
    for (auto& t : pool) t.join();
    for (const Best& b : partial)
      if (b.value >= 0) best.absorb(b.value, b.rank);
  }
  return {best.value, best.rank, stream.orientation_at(best.rank)};
}

SampledGammaD gamma_d_sampled(const Graph& g, DominationQuery q, int samples, Seed seed) {
  validate_query(q);
  if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
  if (g.order() > kGammaOrderCap)
    throw ResourceCapError("exact directed domination capped at n <= " +
                           std::to_string(kGammaOrderCap));
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  SplitMix64 rng(seed);
  Workspace ws;
  Digraph scratch;
  SampledGammaD out;
  out.samples = samples;
  for (int s = 0; s < samples; ++s) {
    Seed sample_seed = rng.next();
    SplitMix64 local(sample_seed);
    scratch.reset(g.order());
    for (auto [u, v] : edges) {
      if (local.next_bool())
        scratch.add_arc(v, u);
      else
        scratch.add_arc(u, v);
    }
    int value = popcount(solve_gamma(scratch, q, ws));
    if (value > out.lower_bound) {
      out.lower_bound = value;
      out.best_sample = s;
      out.best_sample_seed = sample_seed;
    }
  }
  return out;
}

std::vector<int> stacked_dds(const Digraph& dg, int r) {
  if (r < 1) throw std::invalid_argument("stage count r must be >= 1");
  check_order(dg);
  std::uint64_t remaining = dg.vertices();
  std::uint64_t chosen = 0;
  for (int stage = 0; stage < r && remaining; ++stage) {
    std::vector<int> ids = bits::to_vector(remaining);
    Digraph sub = dg.induced(remaining);
    DirectedDominationResult stage_set = gamma(sub, {1, 1});
    for (int local : stage_set.witness) chosen |= bit(ids[static_cast<std::size_t>(local)]);
    remaining &= ~chosen;
  }
  if (!is_dds(dg, chosen, {r, 1}))
    throw std::logic_error("stacked dominating set failed validation");
  return bits::to_vector(chosen);
}

namespace {

std::uint64_t semi_kernel_mask(const Digraph& dg, std::uint64_t active) {
  if (!active) return 0;
  int v = bits::lowest(active);
  std::uint64_t removed = dg.closed_out_neighbors(v) & active;
  std::uint64_t rec = semi_kernel_mask(dg, active & ~removed);
  bool arc_into_v = (dg.in_neighbors(v) & rec) != 0;
  return arc_into_v ? rec : (rec | bit(v));
}

}  // namespace

std::vector<int> semi_kernel(const Digraph& dg) {
  return bits::to_vector(semi_kernel_mask(dg, dg.vertices()));
}

Orientation adversarial_orientation(const Graph& g) {
  std::uint64_t core = max_independent_set_in(g, g.vertices());
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  std::uint64_t word = 0;
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edges[static_cast<std::size_t>(e)];
    // Edges inside the set cannot exist; edges meeting it leave it. The rest
    // run low id -> high id.
    if (bits::test(core, v)) word |= bit(m - 1 - e);
  }
  return Orientation(g, word);
}

}  // namespace dirdom
