#include "vramsey/blocks.hpp"

#include <algorithm>

namespace vramsey {

namespace {

struct Frame {
  int vertex;
  int parent;
  std::size_t next;
};

struct LowpointResult {
  std::vector<Block> blocks;
  std::vector<int> cut_vertices;
};

LowpointResult lowpoint_search(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<Frame> stack;
  LowpointResult out;
  int clock = 0;

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = clock++;
    int root_children = 0;
    stack.push_back({root, -1, 0});

    while (!stack.empty()) {
      Frame& top = stack.back();
      const int v = top.vertex;
      const auto nbrs = g.neighbors(v);
      if (top.next < nbrs.size()) {
        const int w = nbrs[top.next++];
        if (disc[w] < 0) {
          edge_stack.emplace_back(v, w);
          disc[w] = low[w] = clock++;
          if (v == root) ++root_children;
          stack.push_back({w, v, 0});
        } else if (w != top.parent && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }

      const int parent = top.parent;
      stack.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        if (parent != root) is_cut[parent] = 1;
        Block block;
        const Edge closing(parent, v);
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.edges.push_back(e);
          block.vertices.push_back(e.u);
          block.vertices.push_back(e.v);
          if (e == closing) break;
        }
        std::sort(block.edges.begin(), block.edges.end());
        std::sort(block.vertices.begin(), block.vertices.end());
        block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()),
                             block.vertices.end());
        out.blocks.push_back(std::move(block));
      }
    }
    if (root_children >= 2) is_cut[root] = 1;
  }

  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

}  // namespace

std::vector<int> articulation_points(const Graph& g) { return lowpoint_search(g).cut_vertices; }

BlockDecomposition block_decomposition(const Graph& g) {
  LowpointResult raw = lowpoint_search(g);
  BlockDecomposition out;
  out.blocks = std::move(raw.blocks);
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  out.cut_vertices = std::move(raw.cut_vertices);
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out.isolated_vertices.push_back(v);

  std::vector<char> is_cut(g.order(), 0);
  for (int v : out.cut_vertices) is_cut[v] = 1;
  for (std::size_t i = 0; i < out.blocks.size(); ++i)
    for (int v : out.blocks[i].vertices)
      if (is_cut[v]) out.tree_edges.emplace_back(static_cast<int>(i), v);
  return out;
}

}  // namespace vramsey
