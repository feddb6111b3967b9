#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vramsey/degeneracy.hpp"
#include "vramsey/embed.hpp"
#include "vramsey/error.hpp"
#include "vramsey/graph.hpp"

namespace vramsey {

// Copies of A through `center` in role `role` that pairwise meet only at the center.
struct StarFamily {
  int center = 0;
  int role = 0;
  std::vector<Embedding> copies;  // copies[i].map[role] == center
};

struct StarQuery {
  Verdict verdict = Verdict::No;
  StarFamily witness;  // populated with exactly `target` copies on Yes
};

struct StarOptions {
  std::size_t copy_limit = kDefaultCopyLimit;
  std::uint64_t packing_budget = 10'000'000;
  const VertexMask* allowed = nullptr;
};

// Decides whether `target` copies of A with `center` in role `role` exist that
// pairwise intersect only in the center. Exact: all pinned copies are
// enumerated and packed by branch and bound. Unknown if either budget runs out.
StarQuery star_family_at_least(const Graph& g, const Graph& a, int role, int center, int target,
                               const StarOptions& options = {});

// Maximal family of pairwise vertex-disjoint copies of A, built by repeatedly
// taking the first copy found among untouched vertices.
std::vector<Embedding> greedy_disjoint_family(const Graph& g, const Graph& a,
                                              const VertexMask* allowed = nullptr);

struct DegeneracyColoring {
  VertexColoring coloring;
  int degeneracy = 0;
  std::vector<int> removal_order;  // smallest-last removal sequence
};

// Smallest-last ordering, then greedy coloring in reverse removal order.
DegeneracyColoring degeneracy_coloring(const Graph& gamma);

struct ColoringCheck {
  bool ok = true;
  std::optional<Copy> monochromatic;
};

ColoringCheck verify_coloring(const Graph& g, const Graph& a, const VertexColoring& c);

enum class CertificateBranch { Embedding, Coloring, Unknown };

struct LevelStats {
  int depth = 0;
  std::string kind;  // "base", "disjoint" or "glued"
  int pieces = 0;
  int target_vertices = 0;
  int active_vertices = 0;
  int u_size = 0;
  int colors_used = 0;
  int role = -1;
  int attachment = -1;
  int max_out_degree = 0;
  int out_degree_bound = 0;
  int family_size = 0;
};

struct RamseyCertificate {
  CertificateBranch branch = CertificateBranch::Unknown;
  std::optional<Embedding> embedding;     // B into G
  std::optional<VertexColoring> coloring; // of G, no monochromatic A
  bool verified = false;
  // "construction" when the proof's recursion produced the branch,
  // "direct-search" when a direct search for B overrode a coloring or an
  // unknown outcome, "trivial" for patterns below the recursion's range.
  std::string route;
  std::string unknown_reason;
  int a = 0;
  int b = 0;
  int ell = 0;
  long long color_bound = 0;
  ForestDecomposition decomposition;
  std::vector<LevelStats> levels;
};

struct ColorerOptions {
  std::size_t copy_limit = kDefaultCopyLimit;
  std::uint64_t packing_budget = 10'000'000;
  std::uint64_t forest_budget = 1'000'000;
};

// Palette bound ell * (2(a-1)(b-2)+1) for a >= 2, b >= 3.
long long ramsey_color_bound(int ell, int a, int b);

// Either an embedding of B into G, or a coloring of G with at most
// ell(2(a-1)(b-2)+1) colors and no monochromatic copy of A. Both branches are
// verified before returning. Throws NotDegenerate if B is not A-degenerate.
RamseyCertificate find_b_or_color(const Graph& g, const Graph& a, const Graph& b,
                                  const ColorerOptions& options = {});

}  // namespace vramsey
