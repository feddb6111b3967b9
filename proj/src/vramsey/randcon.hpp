#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vramsey/degeneracy.hpp"
#include "vramsey/embed.hpp"
#include "vramsey/graph.hpp"

namespace vramsey {

struct ConstructionParams {
  int n = 0;
  int a = 0;
  double eps = 0.0;
  int k_edges = 0;            // |E(B')|
  double p_raw = 0.0;         // n^(1-a+eps), or the override
  double p = 0.0;             // p_raw clamped to [0, 1]
  bool p_clamped = false;
  double delta0 = 0.0;        // eps / (2(a-1))
  double delta = 0.0;         // delta0 / 2
  long long subset_size = 0;  // N = floor(n^(1-delta0))
  double deletion_c = 1.0;    // deletion budget is deletion_c * sqrt(n)
  std::uint64_t seed = 0;
  std::uint64_t aut = 1;             // automorphisms of A
  std::uint64_t total_copies = 0;    // T = n(n-1)...(n-a+1) / aut(A)
  bool eps_below_half_inverse_k = true;  // eps < 1/(2k); the counting bound assumes it
};

// Throws ParamOutOfRange for n < a, a < 2, eps <= 0, N < a, or T beyond 2^62.
ConstructionParams make_params(int n, const Graph& a, double eps, int k_edges, std::uint64_t seed,
                               double deletion_c = 1.0, std::optional<double> p_override = std::nullopt);

// Binomial random subfamily of all copies of A on [n].
struct CopyHypergraphSample {
  ConstructionParams params;
  std::uint64_t drawn = 0;   // K ~ Binomial(T, p)
  std::vector<Copy> copies;  // K distinct copies, sorted
};

// Draws K ~ Binomial(T, p), then K distinct copies uniformly without
// replacement, which has the law of independent inclusion with probability p.
CopyHypergraphSample sample_copy_hypergraph(const ConstructionParams& params, const Graph& a);

// Union of the sampled copies' edges on n vertices.
Graph union_graph(const CopyHypergraphSample& sample);

struct Trace {
  std::vector<int> vertices;  // endpoints of `edges`, sorted
  std::vector<Edge> edges;
};

struct TraceCover {
  std::vector<Trace> traces;
  std::vector<int> v_sizes;        // |V_i|
  std::vector<int> overlap_sizes;  // |V_i ∩ union of the other V_j|
  int sum_v = 0;
  int size() const { return static_cast<int>(traces.size()); }
};

inline constexpr int kMaxCoverEdges = 12;

// All inclusion-minimal covers of E(B') by subgraphs of B' that embed into A,
// with at most max_ell traces when given. Throws TooLarge above kMaxCoverEdges.
std::vector<TraceCover> enumerate_min_trace_covers(const Graph& b_prime, const Graph& a,
                                                   std::optional<int> max_ell = std::nullopt);

struct CoverInequalityReport {
  int b = 0;
  std::size_t covers = 0;
  std::size_t single_trace_covers = 0;
  std::size_t in_scope = 0;  // size >= 2 and every overlap >= 2
  std::size_t violations = 0;
  std::optional<TraceCover> minimizing;  // smallest sum_v - (b + size) in scope
  std::optional<int> min_slack;
  bool equality_attained = false;
  // Every cover with at least two traces has all overlaps >= 2.
  bool all_multi_covers_overlap_twice = true;
  std::optional<int> min_multi_cover_size;
  std::vector<TraceCover> violating;
};

// Checks sum v_i >= b + ell over every in-scope minimal cover.
CoverInequalityReport verify_cover_inequality(const Graph& b_prime, const Graph& a);

struct SampledDensity {
  long long subset_size = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double fraction = 0.0;
};

// Fraction of uniform `subset_size`-subsets of V(G) inducing a copy of A.
SampledDensity estimate_density(const Graph& g, const Graph& a, long long subset_size, std::uint64_t trials,
                                std::uint64_t seed, unsigned jobs = 1);

struct ConstructionOptions {
  double deletion_c = 1.0;
  std::optional<double> p_override;
  std::size_t copy_limit = kDefaultCopyLimit;
  std::uint64_t density_trials = 1000;
  unsigned jobs = 1;
};

struct MemberReport {
  Graph member;
  Core core;
  std::size_t core_copies = 0;  // copies of B' in the sampled union graph
  bool truncated = false;
  std::size_t deletions = 0;    // vertices deleted on behalf of this member
  bool absent_after = false;    // exact search finds no copy in the output
};

struct ConstructionReport {
  ConstructionParams params;
  std::size_t sampled_copies = 0;
  std::size_t union_edges = 0;
  std::vector<MemberReport> members;
  std::vector<int> deleted;  // sorted vertex ids of the union graph
  double deletion_budget = 0.0;
  bool within_budget = true;
  Graph output;
  std::vector<int> survivors;  // output vertex i is survivors[i]
  bool family_free = false;
  bool truncated = false;
  SampledDensity density;
};

// Samples the union graph of a binomial copy hypergraph of A, extracts a core
// B' from every family member, deletes the smallest vertex of every copy of a
// core not already hit, and verifies the survivors are free of every member.
// Throws NotApplicable if some member is A-degenerate.
ConstructionReport construct_f_free_dense(int n, const Graph& a, const std::vector<Graph>& family, double eps,
                                          std::uint64_t seed, const ConstructionOptions& options = {});

struct CopyCountStats {
  ConstructionParams params;  // of trial 0
  std::vector<std::size_t> counts;
  double mean = 0.0;
  std::size_t max = 0;
  double sqrt_n = 0.0;
  double fraction_within = 0.0;  // X <= sqrt(n)
  double exceedance = 0.0;       // X > sqrt(n)
  bool truncated = false;
  std::optional<int> min_cover_size;     // smallest cover with >= 2 traces
  std::optional<double> exponent_bound;  // min_cover_size * eps
};

// Monte Carlo distribution of the number of copies of B' in the union graph.
CopyCountStats estimate_copy_count(const Graph& b_prime, const Graph& a, int n, double eps, std::uint64_t trials,
                                   std::uint64_t seed, unsigned jobs = 1,
                                   std::optional<double> p_override = std::nullopt,
                                   std::size_t copy_limit = kDefaultCopyLimit);

}  // namespace vramsey
