#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vramsey/blocks.hpp"
#include "vramsey/graph.hpp"

namespace vramsey {

struct DegeneracyCheck {
  bool degenerate = true;
  // First block (in block order) that does not embed into A.
  std::optional<Block> witness;
};

// B is A-degenerate iff every block of B embeds into A: every 2-connected
// subgraph lies inside a single block, and subgraphs of A are closed under
// taking subgraphs.
DegeneracyCheck is_a_degenerate(const Graph& b, const Graph& a);

struct ForestPiece {
  std::vector<int> vertices;  // sorted ids of B
  std::vector<Edge> edges;    // sorted edges of B
  // Single vertex shared with the union of earlier pieces; empty for the first
  // piece and for pieces disjoint from everything before them.
  std::optional<int> attachment;
  // witness[i] is the vertex of A receiving vertices[i].
  std::vector<int> witness;
};

struct ForestDecomposition {
  std::vector<ForestPiece> pieces;
  // False when the node budget ran out before the minimum was proven.
  bool minimal = true;
  // False when the budget ran out before all minimum decompositions were
  // compared for the lexicographic tie-break.
  bool search_complete = true;
  std::uint64_t search_nodes = 0;

  std::size_t size() const { return pieces.size(); }
};

struct ForestOptions {
  std::uint64_t node_budget = 1'000'000;
};

// Minimum-size A-forest decomposition of B, or nullopt when B is not
// A-degenerate. Pieces meet earlier pieces in at most one vertex. Among minimum
// decompositions the lexicographically smallest sequence of piece vertex sets
// is returned.
std::optional<ForestDecomposition> forest_decomposition(const Graph& b, const Graph& a,
                                                        ForestOptions options = {});

// Re-checks cover, edge-disjointness, the attachment bound and every witness.
bool verify_forest(const Graph& b, const Graph& a, const ForestDecomposition& d);

struct Core {
  Graph graph;
  std::vector<int> original;  // graph vertex i is original[i] in B
};

// A block of B that does not embed into A, with the fewest vertices (first in
// block order among ties). Throws IsDegenerate if every block embeds.
Core extract_core(const Graph& b, const Graph& a);

}  // namespace vramsey
