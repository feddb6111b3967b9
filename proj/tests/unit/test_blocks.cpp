#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "vramsey/blocks.hpp"
#include "vramsey/generators.hpp"

using namespace vramsey;

namespace {

std::vector<std::vector<Edge>> block_edges(const BlockDecomposition& d) {
  std::vector<std::vector<Edge>> out;
  for (const Block& b : d.blocks) out.push_back(b.edges);
  std::sort(out.begin(), out.end());
  return out;
}

void check_invariants(const Graph& g) {
  const BlockDecomposition d = block_decomposition(g);
  std::vector<Edge> all;
  for (const Block& b : d.blocks) {
    all.insert(all.end(), b.edges.begin(), b.edges.end());
    std::set<int> vs;
    for (const Edge& e : b.edges) vs.insert({e.u, e.v});
    ASSERT_EQ(std::vector<int>(vs.begin(), vs.end()), b.vertices);
    if (b.vertices.size() >= 3) {
      const Graph h = oracle::spanned(b.edges);
      for (int v = 0; v < h.order(); ++v) ASSERT_EQ(oracle::component_count(h, v), 1);
    } else {
      ASSERT_EQ(b.edges.size(), 1u);
    }
  }
  std::sort(all.begin(), all.end());
  ASSERT_EQ(all, g.edges());
  const std::set<int> cuts(d.cut_vertices.begin(), d.cut_vertices.end());
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(d.blocks[i].vertices.begin(), d.blocks[i].vertices.end(),
                            d.blocks[j].vertices.begin(), d.blocks[j].vertices.end(),
                            std::back_inserter(common));
      ASSERT_LE(common.size(), 1u);
      if (!common.empty()) ASSERT_TRUE(cuts.contains(common.front()));
    }
  // Block-cut forest: one tree per nontrivial component, so it has
  // (#blocks + #cuts) - (#components with edges) incidences.
  int nontrivial = oracle::component_count(g) - static_cast<int>(d.isolated_vertices.size());
  ASSERT_EQ(static_cast<int>(d.tree_edges.size()),
            static_cast<int>(d.blocks.size() + d.cut_vertices.size()) - nontrivial);
  for (const auto& [b, c] : d.tree_edges)
    ASSERT_TRUE(std::binary_search(d.blocks[b].vertices.begin(), d.blocks[b].vertices.end(), c));
  for (std::size_t i = 1; i < d.blocks.size(); ++i) ASSERT_LT(d.blocks[i - 1].edges[0], d.blocks[i].edges[0]);
}

}  // namespace

TEST(ArticulationPoints, Examples) {
  EXPECT_EQ(articulation_points(path_graph(3)), std::vector<int>{1});
  EXPECT_TRUE(articulation_points(cycle_graph(5)).empty());
  EXPECT_EQ(articulation_points(bowtie_graph()), std::vector<int>{2});
  EXPECT_EQ(articulation_points(bowtie_graph()), oracle::articulation_points(bowtie_graph()));
}

TEST(BlockDecomposition, Examples) {
  const BlockDecomposition c5 = block_decomposition(cycle_graph(5));
  ASSERT_EQ(c5.blocks.size(), 1u);
  EXPECT_EQ(c5.blocks[0].edges, cycle_graph(5).edges());
  EXPECT_TRUE(c5.cut_vertices.empty());

  const BlockDecomposition bow = block_decomposition(bowtie_graph());
  ASSERT_EQ(bow.blocks.size(), 2u);
  EXPECT_EQ(bow.blocks[0].vertices, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(bow.blocks[1].vertices, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(bow.cut_vertices, std::vector<int>{2});

  const BlockDecomposition p5 = block_decomposition(path_graph(5));
  EXPECT_EQ(p5.blocks.size(), 4u);
  EXPECT_EQ(p5.cut_vertices, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(p5.cut_vertices, oracle::articulation_points(path_graph(5)));
  EXPECT_EQ(block_edges(p5), oracle::blocks(path_graph(5)));
}

TEST(BlockDecomposition, IsolatedVerticesAreLeaves) {
  const Graph g(4, {{0, 1}});
  const BlockDecomposition d = block_decomposition(g);
  EXPECT_EQ(d.isolated_vertices, (std::vector<int>{2, 3}));
  EXPECT_EQ(d.blocks.size(), 1u);
  EXPECT_TRUE(d.tree_edges.empty());
}

TEST(BlockDecomposition, MatchesRemovalOracleOnCatalogue) {
  for (const Graph& g : oracle::catalogue(7)) {
    ASSERT_EQ(articulation_points(g), oracle::articulation_points(g)) << write_graph6(g);
    const BlockDecomposition d = block_decomposition(g);
    ASSERT_EQ(d.cut_vertices, oracle::articulation_points(g)) << write_graph6(g);
    ASSERT_EQ(block_edges(d), oracle::blocks(g)) << write_graph6(g);
    check_invariants(g);
  }
}

TEST(BlockDecomposition, RandomLargerGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 8 + static_cast<int>(seed % 9);
    const Graph g = random_graph_np(n, 0.12 + 0.01 * static_cast<double>(seed % 10), seed);
    ASSERT_EQ(articulation_points(g), oracle::articulation_points(g));
    ASSERT_EQ(block_edges(block_decomposition(g)), oracle::blocks(g));
    check_invariants(g);
  }
}

TEST(BlockDecomposition, DeepPathDoesNotRecurse) {
  const Graph g = path_graph(20000);
  const BlockDecomposition d = block_decomposition(g);
  EXPECT_EQ(d.blocks.size(), 19999u);
  EXPECT_EQ(d.cut_vertices.size(), 19998u);
}
