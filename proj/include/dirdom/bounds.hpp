#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dirdom/domination.hpp"
#include "dirdom/graph.hpp"

namespace dirdom {

// Closed-form bounds. Each formula follows the logarithm printed with it:
// log2 for the tournament/Nordhaus-Gaddum/claw-free/Arnautov forms, natural
// log elsewhere.

struct ErdosBounds {
  double lower;  // log2(n) - 2 log2(log2 n)
  double upper;  // log2(n+1)
};
ErdosBounds erdos_bounds(int n);  // n >= 2

double main_upper(double n, double alpha);            // alpha (1 + 2 ln(n/alpha))
double cor_chi_upper(double alpha, double chi);       // alpha (1 + 2 ln chi)
double cor_avg_upper(double alpha, double avg_deg);   // alpha (1 + 2 ln(avg_deg + 1))
double degen_upper(int n, int d);                     // 2d+1 + 2 ln((n-2d+1)/2)
double k1m_upper(double n, int m, double min_deg);    // 2(m-1) n ln(min_deg+m-1)/(min_deg+m-1)
double clawfree_upper(double n, double min_deg);      // 4 n log2(min_deg+2)/(min_deg+2)
double arnautov_upper(double n, double min_deg);      // n (log2(min_deg+1) + 1)/(min_deg+1)
double faudree_alpha_upper(double n, int m, double min_deg);  // (m-1) n/(min_deg+m-1)

struct NordhausGaddumBounds {
  double max_lower_witness;  // n + log2 n - 2 log2(log2 n)
  int max_upper;             // n + ceil(n/2)
};
NordhausGaddumBounds ng_bounds(int n);  // n >= 2

struct RDominationUppers {
  double complete_case;  // r log2(n+1)
  double general_case;   // r * main_upper(n, alpha)
};
RDominationUppers rdom_uppers(int n, int alpha, int r);

// One evaluated inequality. `satisfied` is set only when the exact quantity
// the bound constrains was computed; otherwise it stays unknown.
struct BoundEntry {
  std::string name;
  bool applicable = false;
  double value = 0.0;
  std::optional<bool> satisfied;
};

struct BoundReportOptions {
  bool exact = true;            // sweep orientations for the Gamma values
  bool with_complement = true;  // also sweep the complement (Nordhaus-Gaddum)
  std::optional<int> r;         // additionally compute Gamma_{d,r}
  std::optional<int> distance;  // additionally compute Gamma_d(G,d)
  std::uint64_t max_orientations = kDefaultOrientationCap;
  int workers = 1;
};

struct BoundReport {
  std::string graph6;
  int n = 0;
  int m = 0;

  std::optional<int> alpha;
  std::optional<int> matching;
  std::optional<int> chi;
  std::optional<int> gamma_undirected;
  std::optional<int> beta;
  int min_degree = 0;
  int max_degree = 0;
  double average_degree = 0.0;
  int degeneracy_value = 0;
  int complement_degeneracy = 0;
  std::string caro_wei_exact;  // rational as "p/q"
  std::optional<int> k1m_free_m;  // least m >= 3 with no induced K_{1,m}

  std::optional<int> gamma_d_value;
  std::optional<std::uint64_t> gamma_d_rank;
  std::optional<int> gamma_d_complement;
  std::optional<int> gamma_dr_value;
  std::optional<int> r_used;
  std::optional<int> gamma_d_dist_value;
  std::optional<int> d_used;

  std::vector<BoundEntry> entries;
};

// Every applicable bound for one graph. Per-entry caps degrade that entry to
// "unknown" instead of failing the report.
BoundReport bound_report(const Graph& g, const BoundReportOptions& opt = {});

}  // namespace dirdom
