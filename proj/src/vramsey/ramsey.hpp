#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vramsey/embed.hpp"
#include "vramsey/error.hpp"
#include "vramsey/graph.hpp"

namespace vramsey {

// Vertex sets of the copies of A in G. G is r-Ramsey for A iff this
// hypergraph has no r-coloring without a monochromatic hyperedge.
struct CopyHypergraph {
  int n = 0;
  std::vector<std::vector<int>> hyperedges;  // sorted, deduplicated by vertex set
  std::vector<Copy> witnesses;               // a copy realizing each hyperedge
  bool truncated = false;
};

CopyHypergraph copy_hypergraph(const Graph& g, const Graph& a, std::size_t copy_limit = kDefaultCopyLimit);

struct RamseyOptions {
  std::size_t copy_limit = kDefaultCopyLimit;
  std::uint64_t node_budget = 100'000'000;
};

struct RamseyResult {
  // Yes: every r-coloring has a monochromatic copy of A.
  Verdict verdict = Verdict::Unknown;
  std::optional<VertexColoring> witness;  // on No: at most r colors, verified
  std::uint64_t nodes = 0;
  std::size_t hyperedges = 0;
  std::string unknown_reason;
};

// Backtracking over colorings in vertex-id order. Vertex 0 gets color 0 and a
// vertex may only open color (max used)+1, which removes color permutations.
// A pattern with isolated vertices is rejected with UnsupportedPattern.
RamseyResult is_r_ramsey(const Graph& g, const Graph& a, int r, const RamseyOptions& options = {});

// floor(eps * n), tolerant of binary rounding just below an integer.
int subset_size_for(double eps, int n);

struct DensityOptions {
  bool exact = true;
  std::uint64_t trials = 1000;  // sampled mode
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t subset_cap = 1'000'000;  // exact mode
};

struct DensityResult {
  int subset_size = 0;
  bool exact = true;
  // Exact mode.
  bool dense = false;
  std::uint64_t subsets_checked = 0;
  std::optional<std::vector<int>> free_subset;  // an A-free subset when not dense
  // Sampled mode.
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double fraction = 0.0;
};

// Whether every floor(eps*n)-subset of G induces a copy of A (exact), or the
// fraction of uniformly sampled subsets that do (sampled).
DensityResult is_eps_dense(const Graph& g, const Graph& a, double eps, const DensityOptions& options = {});

}  // namespace vramsey
