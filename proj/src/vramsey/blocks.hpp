#pragma once

#include <utility>
#include <vector>

#include "vramsey/graph.hpp"

namespace vramsey {

// A maximal 2-vertex-connected subgraph; single edges count as blocks.
struct Block {
  std::vector<int> vertices;  // sorted
  std::vector<Edge> edges;    // sorted
};

struct BlockDecomposition {
  // Ordered by smallest contained edge.
  std::vector<Block> blocks;
  std::vector<int> cut_vertices;       // sorted
  std::vector<int> isolated_vertices;  // degree-0 leaves of the block-cut forest
  // Block-cut forest: (block index, cut vertex) incidences, sorted.
  std::vector<std::pair<int, int>> tree_edges;
};

std::vector<int> articulation_points(const Graph& g);
BlockDecomposition block_decomposition(const Graph& g);

}  // namespace vramsey
