#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vramsey/colorer.hpp"
#include "vramsey/error.hpp"
#include "vramsey/generators.hpp"
#include "vramsey/ramsey.hpp"

using namespace vramsey;

namespace {

const Graph k2 = complete_graph(2);
const Graph k3 = complete_graph(3);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Internal;
}

}  // namespace

TEST(CopyHypergraph, Examples) {
  const auto k4 = copy_hypergraph(complete_graph(4), k3);
  EXPECT_EQ(k4.hyperedges.size(), 4u);
  for (const auto& e : k4.hyperedges) EXPECT_EQ(e.size(), 3u);
  EXPECT_TRUE(copy_hypergraph(cycle_graph(4), k3).hyperedges.empty());
  const auto edges = copy_hypergraph(complete_graph(4), k2);
  EXPECT_EQ(edges.hyperedges.size(), 6u);
  // C4 in K4: three copies on one vertex set.
  EXPECT_EQ(copy_hypergraph(complete_graph(4), cycle_graph(4)).hyperedges.size(), 1u);
}

TEST(IsRRamsey, Examples) {
  EXPECT_EQ(is_r_ramsey(complete_graph(5), k3, 2).verdict, Verdict::Yes);
  const RamseyResult k4 = is_r_ramsey(complete_graph(4), k3, 2);
  ASSERT_EQ(k4.verdict, Verdict::No);
  ASSERT_TRUE(k4.witness);
  EXPECT_EQ(k4.witness->colors, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(is_r_ramsey(complete_graph(7), k2, 6).verdict, Verdict::Yes);
}

TEST(IsRRamsey, RejectsPatternsWithIsolatedVertices) {
  EXPECT_EQ(code_of([] { is_r_ramsey(complete_graph(4), Graph(3, {{0, 1}}), 2); }), ErrorCode::UnsupportedPattern);
  EXPECT_EQ(code_of([] { is_r_ramsey(complete_graph(4), k3, 0); }), ErrorCode::InvalidArgument);
}

TEST(IsRRamsey, PigeonholeLaw) {
  const std::vector<Graph> patterns = {k2, k3, path_graph(3), cycle_graph(4)};
  for (const Graph& a : patterns)
    for (int r = 1; r <= 3; ++r) {
      const int n = r * (a.order() - 1) + 1;
      ASSERT_EQ(is_r_ramsey(complete_graph(n), a, r).verdict, Verdict::Yes);
    }
  for (int s = 2; s <= 3; ++s)
    for (int r = 1; r <= 3; ++r)
      for (int n = 1; n <= r * (s - 1); ++n) ASSERT_EQ(is_r_ramsey(complete_graph(n), complete_graph(s), r).verdict, Verdict::No);
}

TEST(IsRRamsey, MatchesExhaustiveColorings) {
  const std::vector<Graph> patterns = {k2, k3, path_graph(3), cycle_graph(4)};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_graph_np(4 + static_cast<int>(seed % 5), 0.6, seed);
    for (const Graph& a : patterns)
      for (int r = 1; r <= 3; ++r) {
        const RamseyResult res = is_r_ramsey(g, a, r);
        ASSERT_EQ(res.verdict == Verdict::Yes, oracle::r_ramsey(g, a, r)) << write_graph6(g) << " r=" << r;
        if (res.verdict == Verdict::No) {
          ASSERT_LE(res.witness->palette_size, r);
          ASSERT_TRUE(verify_coloring(g, a, *res.witness).ok);
        }
      }
  }
}

TEST(IsRRamsey, Monotone) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph_np(8, 0.7, seed);
    for (int r = 2; r <= 4; ++r)
      if (is_r_ramsey(g, k3, r).verdict == Verdict::Yes) ASSERT_EQ(is_r_ramsey(g, k3, r - 1).verdict, Verdict::Yes);
  }
}

TEST(IsRRamsey, BudgetGivesUnknown) {
  const RamseyResult res = is_r_ramsey(complete_graph(9), k3, 4, {.node_budget = 3});
  EXPECT_EQ(res.verdict, Verdict::Unknown);
  EXPECT_FALSE(res.unknown_reason.empty());
  const RamseyResult trunc = is_r_ramsey(complete_graph(9), k3, 4, {.copy_limit = 5});
  EXPECT_EQ(trunc.verdict, Verdict::Unknown);
}

TEST(IsEpsDense, Examples) {
  EXPECT_TRUE(is_eps_dense(complete_graph(10), k3, 0.3).dense);
  const DensityResult c10 = is_eps_dense(cycle_graph(10), k2, 0.5);
  EXPECT_FALSE(c10.dense);
  ASSERT_TRUE(c10.free_subset);
  EXPECT_EQ(c10.free_subset->size(), 5u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph_np(7, 0.3, seed);
    EXPECT_EQ(is_eps_dense(g, k3, 1.0).dense, contains_copy(k3, g));
  }
  EXPECT_EQ(code_of([] { is_eps_dense(complete_graph(3), k2, 0.2); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { is_eps_dense(complete_graph(40), k2, 0.5); }), ErrorCode::SubsetSpaceTooLarge);
}

TEST(IsEpsDense, SubsetSizeRounding) {
  EXPECT_EQ(subset_size_for(0.3, 10), 3);
  EXPECT_EQ(subset_size_for(0.1, 30), 3);
  EXPECT_EQ(subset_size_for(1.0, 7), 7);
  EXPECT_EQ(subset_size_for(0.5, 9), 4);
}

TEST(IsEpsDense, ExactAgainstBruteForce) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph_np(8, 0.5, seed);
    for (double eps : {0.25, 0.5, 0.75}) {
      const int m = subset_size_for(eps, g.order());
      bool dense = true;
      for (std::uint32_t mask = 0; mask < (1U << g.order()) && dense; ++mask) {
        if (std::popcount(mask) != m) continue;
        std::vector<int> vs;
        for (int v = 0; v < g.order(); ++v)
          if (mask >> v & 1U) vs.push_back(v);
        dense = oracle::embeds(k3, induced_subgraph(g, vs).graph);
      }
      ASSERT_EQ(is_eps_dense(g, k3, eps).dense, dense);
    }
  }
}

TEST(IsEpsDense, DensityImpliesRamsey) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Graph g = random_graph_np(6 + static_cast<int>(seed % 5), 0.75, seed);
    for (int r = 2; r <= 3; ++r) {
      if (!is_eps_dense(g, k3, 1.0 / r).dense) continue;
      ++checked;
      ASSERT_EQ(is_r_ramsey(g, k3, r).verdict, Verdict::Yes) << write_graph6(g);
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(IsEpsDense, SampledModeReportsCounts) {
  const DensityResult s = is_eps_dense(complete_graph(20), k3, 0.15, {.exact = false, .trials = 200, .seed = 4});
  EXPECT_FALSE(s.exact);
  EXPECT_EQ(s.trials, 200u);
  EXPECT_EQ(s.hits, 200u);
  EXPECT_DOUBLE_EQ(s.fraction, 1.0);
}
