#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dirdom/digraph.hpp"
#include "dirdom/graph.hpp"

namespace dirdom {

// Guaranteed part-size function f on [t, inf): positive, nondecreasing,
// continuous. Constant and affine forms integrate in closed form; black-box
// functions fall back to adaptive Simpson quadrature and get their positivity
// and monotonicity spot-checked by sampling.
class SizeGuarantee {
 public:
  static SizeGuarantee constant(double c);
  static SizeGuarantee affine(double slope, double intercept);  // f(x) = slope*x + intercept
  static SizeGuarantee custom(std::function<double(double)> f);

  double operator()(double x) const;
  bool closed_form() const { return kind_ != Kind::kCustom; }

  // Integral of 1/f over [lo, hi]; absolute quadrature tolerance 1e-9.
  double reciprocal_integral(double lo, double hi) const;

 private:
  enum class Kind { kConstant, kAffine, kCustom };
  Kind kind_ = Kind::kConstant;
  double a_ = 0.0;
  double b_ = 1.0;
  std::function<double(double)> fn_;
};

// t + integral of 1/f over [t, max(n,t)].
double gpl_bound(int t, const SizeGuarantee& f, int n);

struct PartWitness {
  enum class Kind { kIndependentSet, kDominator };
  Kind kind = Kind::kIndependentSet;
  int dominator = -1;  // meaningful for kDominator
};

struct PartitionCertificate {
  std::string extractor;
  int threshold = 0;
  double bound = 0.0;
  int part_count = 0;
  std::vector<std::vector<int>> parts;  // disjoint, cover all vertices, extraction order
  std::vector<PartWitness> witnesses;
};

// A part extraction rule valid on a hereditary class of instances: whenever
// more than `threshold` vertices remain, extract() must return a part of at
// least ceil(f(remaining)) vertices from the active set.
template <class Instance>
struct Extractor {
  std::string name;
  int threshold = 2;
  SizeGuarantee guarantee;
  std::function<void(const Instance&)> check_hypothesis;  // may be empty
  std::function<std::pair<std::uint64_t, PartWitness>(const Instance&, std::uint64_t)> extract;
  std::function<PartWitness(int)> singleton_witness;
};

// The greedy recursion: extract parts while more than `threshold` vertices
// remain, then finish with singletons. Violations of the extractor's size
// guarantee raise ExtractorContractError; the certificate always satisfies
// part_count <= ceil(gpl_bound(t, f, n)).
PartitionCertificate greedy_partition(const Graph& g, const Extractor<Graph>& ex);
PartitionCertificate greedy_partition(const Digraph& dg, const Extractor<Digraph>& ex);

// Parts are lexicographically least maximum independent sets; t = 2, f = 1.
Extractor<Graph> independence_extractor();

// Parts are closed out-neighborhoods of a maximum out-degree vertex; requires
// alpha(underlying) <= alpha_cap; t = max(2, alpha_cap),
// f(x) = (x - alpha)/(2 alpha) + 1.
Extractor<Digraph> outdegree_peel_extractor(int alpha_cap);

// Same peel rule on digraphs whose underlying complement is d-degenerate;
// t = 2d+1, f(x) = (x-1)/2 - d + 1.
Extractor<Digraph> degenerate_peel_extractor(int d);

// Repeatedly take the maximum out-degree vertex (ties to the least id) and
// remove its closed out-neighborhood; the taken vertices form a directed
// dominating set.
std::vector<int> peel_dds(const Digraph& dg);

}  // namespace dirdom
