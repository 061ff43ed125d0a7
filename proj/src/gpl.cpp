#include "dirdom/gpl.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dirdom/domination.hpp"
#include "dirdom/errors.hpp"
#include "dirdom/invariants.hpp"

namespace dirdom {
namespace {

using bits::bit;
using bits::popcount;

double simpson(const std::function<double(double)>& f, double lo, double hi, double flo,
               double fmid, double fhi) {
  return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi, double flo,
                        double fmid, double fhi, double whole, double tol, int depth) {
  if (depth > 60) return whole;
  double mid = 0.5 * (lo + hi);
  double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
  double flmid = f(lmid), frmid = f(rmid);
  double left = simpson(f, lo, mid, flo, flmid, fmid);
  double right = simpson(f, mid, hi, fmid, frmid, fhi);
  if (std::abs(left + right - whole) <= 15.0 * tol) return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, lo, mid, flo, flmid, fmid, left, tol / 2.0, depth + 1) +
         adaptive_simpson(f, mid, hi, fmid, frmid, fhi, right, tol / 2.0, depth + 1);
}

int ceil_with_slack(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }

template <class Instance>
PartitionCertificate run_engine(const Instance& inst, const Extractor<Instance>& ex) {
  if (ex.check_hypothesis) ex.check_hypothesis(inst);
  int n = inst.order();
  PartitionCertificate cert;
  cert.extractor = ex.name;
  cert.threshold = ex.threshold;
  cert.bound = gpl_bound(ex.threshold, ex.guarantee, n);

  std::uint64_t active = bits::low_mask(n);
  while (popcount(active) > ex.threshold) {
    int remaining = popcount(active);
    auto [part, witness] = ex.extract(inst, active);
    if (part == 0 || (part & ~active))
      throw ExtractorContractError("extractor \"" + ex.name +
                                   "\" returned an invalid part");
    int need = ceil_with_slack(ex.guarantee(static_cast<double>(remaining)));
    if (popcount(part) < need)
      throw ExtractorContractError("extractor \"" + ex.name + "\" returned " +
                                   std::to_string(popcount(part)) + " vertices, guarantee is " +
                                   std::to_string(need));
    cert.parts.push_back(bits::to_vector(part));
    cert.witnesses.push_back(witness);
    active &= ~part;
  }
  bits::for_each_bit(active, [&](int v) {
    cert.parts.push_back({v});
    cert.witnesses.push_back(ex.singleton_witness ? ex.singleton_witness(v)
                                                  : PartWitness{PartWitness::Kind::kIndependentSet, -1});
  });
  cert.part_count = static_cast<int>(cert.parts.size());
  if (cert.part_count > ceil_with_slack(cert.bound) && n > 0)
    throw ExtractorContractError("partition exceeds the integral bound: " +
                                 std::to_string(cert.part_count) + " parts vs bound " +
                                 std::to_string(cert.bound));
  return cert;
}

// Closed out-neighborhood of a maximum out-degree vertex, ties least id.
std::pair<std::uint64_t, PartWitness> peel_step(const Digraph& dg, std::uint64_t active) {
  int pick = -1, deg = -1;
  bits::for_each_bit(active, [&](int v) {
    int d = popcount(dg.out_neighbors(v) & active);
    if (d > deg) {
      deg = d;
      pick = v;
    }
  });
  std::uint64_t part = (dg.closed_out_neighbors(pick)) & active;
  return {part, PartWitness{PartWitness::Kind::kDominator, pick}};
}

}  // namespace

SizeGuarantee SizeGuarantee::constant(double c) {
  if (c < 1.0) throw std::invalid_argument("size guarantee must be at least 1");
  SizeGuarantee g;
  g.kind_ = Kind::kConstant;
  g.b_ = c;
  return g;
}

SizeGuarantee SizeGuarantee::affine(double slope, double intercept) {
  if (slope <= 0.0) throw std::invalid_argument("affine size guarantee needs positive slope");
  SizeGuarantee g;
  g.kind_ = Kind::kAffine;
  g.a_ = slope;
  g.b_ = intercept;
  return g;
}

SizeGuarantee SizeGuarantee::custom(std::function<double(double)> f) {
  SizeGuarantee g;
  g.kind_ = Kind::kCustom;
  g.fn_ = std::move(f);
  return g;
}

double SizeGuarantee::operator()(double x) const {
  switch (kind_) {
    case Kind::kConstant:
      return b_;
    case Kind::kAffine:
      return a_ * x + b_;
    case Kind::kCustom:
      return fn_(x);
  }
  return b_;
}

double SizeGuarantee::reciprocal_integral(double lo, double hi) const {
  if (hi <= lo) return 0.0;
  switch (kind_) {
    case Kind::kConstant:
      return (hi - lo) / b_;
    case Kind::kAffine:
      return (std::log(a_ * hi + b_) - std::log(a_ * lo + b_)) / a_;
    case Kind::kCustom: {
      // Spot-check the declared shape on a coarse grid before integrating.
      double prev = 0.0;
      for (int i = 0; i <= 64; ++i) {
        double x = lo + (hi - lo) * i / 64.0;
        double fx = fn_(x);
        if (fx <= 0.0)
          throw std::invalid_argument("size guarantee is not positive at x=" + std::to_string(x));
        if (i > 0 && fx < prev - 1e-12)
          throw std::invalid_argument("size guarantee is not nondecreasing near x=" +
                                      std::to_string(x));
        prev = fx;
      }
      auto recip = [this](double x) { return 1.0 / fn_(x); };
      double flo = recip(lo), fhi = recip(hi), fmid = recip(0.5 * (lo + hi));
      double whole = simpson(recip, lo, hi, flo, fmid, fhi);
      return adaptive_simpson(recip, lo, hi, flo, fmid, fhi, whole, 1e-9, 0);
    }
  }
  return 0.0;
}

double gpl_bound(int t, const SizeGuarantee& f, int n) {
  if (t < 2) throw std::invalid_argument("threshold t must be at least 2");
  if (n < 0) throw std::invalid_argument("order must be non-negative");
  double hi = static_cast<double>(std::max(n, t));
  if (f(static_cast<double>(t)) <= 0.0 || f(hi) <= 0.0)
    throw std::invalid_argument("size guarantee must be positive on [t, n]");
  return static_cast<double>(t) + f.reciprocal_integral(static_cast<double>(t), hi);
}

PartitionCertificate greedy_partition(const Graph& g, const Extractor<Graph>& ex) {
  return run_engine(g, ex);
}

PartitionCertificate greedy_partition(const Digraph& dg, const Extractor<Digraph>& ex) {
  return run_engine(dg, ex);
}

Extractor<Graph> independence_extractor() {
  Extractor<Graph> ex;
  ex.name = "independence";
  ex.threshold = 2;
  ex.guarantee = SizeGuarantee::constant(1.0);
  ex.extract = [](const Graph& g, std::uint64_t active) {
    std::uint64_t part = max_independent_set_in(g, active);
    return std::pair{part, PartWitness{PartWitness::Kind::kIndependentSet, -1}};
  };
  ex.singleton_witness = [](int) { return PartWitness{PartWitness::Kind::kIndependentSet, -1}; };
  return ex;
}

Extractor<Digraph> outdegree_peel_extractor(int alpha_cap) {
  if (alpha_cap < 1) throw std::invalid_argument("alpha cap must be >= 1");
  Extractor<Digraph> ex;
  ex.name = "outdegree-peel";
  ex.threshold = std::max(2, alpha_cap);
  double alpha = static_cast<double>(alpha_cap);
  ex.guarantee = SizeGuarantee::affine(1.0 / (2.0 * alpha), 0.5);
  ex.check_hypothesis = [alpha_cap](const Digraph& dg) {
    int a = independence_number_in(dg.underlying(), dg.vertices());
    if (a > alpha_cap)
      throw HypothesisError("hypothesis violated: independence number " + std::to_string(a) +
                            " exceeds the declared cap " + std::to_string(alpha_cap));
  };
  ex.extract = [](const Digraph& dg, std::uint64_t active) { return peel_step(dg, active); };
  ex.singleton_witness = [](int v) { return PartWitness{PartWitness::Kind::kDominator, v}; };
  return ex;
}

Extractor<Digraph> degenerate_peel_extractor(int d) {
  if (d < 1) throw std::invalid_argument("degeneracy parameter d must be >= 1");
  Extractor<Digraph> ex;
  ex.name = "degenerate-peel";
  ex.threshold = 2 * d + 1;
  ex.guarantee = SizeGuarantee::affine(0.5, 0.5 - static_cast<double>(d));
  ex.check_hypothesis = [d](const Digraph& dg) {
    if (!is_complement_d_degenerate(dg.underlying(), d))
      throw HypothesisError("hypothesis violated: complement is not " + std::to_string(d) +
                            "-degenerate");
  };
  ex.extract = [](const Digraph& dg, std::uint64_t active) { return peel_step(dg, active); };
  ex.singleton_witness = [](int v) { return PartWitness{PartWitness::Kind::kDominator, v}; };
  return ex;
}

std::vector<int> peel_dds(const Digraph& dg) {
  std::uint64_t active = dg.vertices();
  std::uint64_t taken = 0;
  while (active) {
    auto [part, witness] = peel_step(dg, active);
    taken |= bit(witness.dominator);
    active &= ~part;
  }
  if (!is_dds(dg, taken, {1, 1})) throw std::logic_error("peel result failed DDS validation");
  return bits::to_vector(taken);
}

}  // namespace dirdom
