#pragma once

// Brute-force reference implementations for small graphs. None of these call
// into the library's search code; they only use the Graph container.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vramsey/graph.hpp"

namespace oracle {

using vramsey::Edge;
using vramsey::Graph;

// Every graph on n vertices up to isomorphism (n <= 8), one labeled
// representative each. Counts: 1, 2, 4, 11, 34, 156, 1044, 12346.
const std::vector<Graph>& graphs_on(int n);
// graphs_on(1) .. graphs_on(max_n), concatenated.
std::vector<Graph> catalogue(int max_n);

int component_count(const Graph& g, int removed = -1);
bool connected(const Graph& g);
// Vertices whose removal increases the number of components.
std::vector<int> articulation_points(const Graph& g);
// Edges e and f lie in the same block iff no single vertex separates them:
// equal edges, or they share an endpoint x and their other endpoints stay
// connected in g - x, or they are disjoint and stay connected after removing
// any one vertex. Blocks returned as sorted edge lists, sorted.
std::vector<std::vector<Edge>> blocks(const Graph& g);

// All injective maps pattern -> host preserving edges.
std::vector<std::vector<int>> embeddings(const Graph& pattern, const Graph& host);
std::uint64_t automorphisms(const Graph& g);
using CopyKey = std::pair<std::vector<int>, std::vector<Edge>>;
std::set<CopyKey> copies(const Graph& pattern, const Graph& host, std::optional<std::pair<int, int>> pin = {});
bool embeds(const Graph& pattern, const Graph& host);
// Same answer, but checks edges to already placed vertices as it goes.
bool has_copy(const Graph& pattern, const Graph& host);

// Graph on `vertices` (relabeled in sorted order) with the given edges.
Graph spanned(const std::vector<Edge>& edges, std::vector<int> vertices = {});

// Every 2-vertex-connected subgraph of b (and every single edge) embeds in a.
bool a_degenerate(const Graph& b, const Graph& a);
// Minimum number of pieces of an A-forest of b, by dynamic programming over
// the sets of covered items (edges and isolated vertices). nullopt if none.
std::optional<int> min_forest_size(const Graph& b, const Graph& a);

// Chromatic-style exhaustive check: true iff every r-coloring of g has a
// monochromatic copy of a. Exponential in n.
bool r_ramsey(const Graph& g, const Graph& a, int r);
// Smallest d with every subgraph having a vertex of degree <= d.
int degeneracy(const Graph& g);

// Straightforward graph6 encoder.
std::string graph6(const Graph& g);

struct BruteCover {
  std::vector<std::vector<Edge>> traces;
  std::vector<int> v_sizes;
  std::vector<int> overlap_sizes;
  int sum_v = 0;
};
// All inclusion-minimal covers of E(b) by edge subsets spanning subgraphs that
// embed in a, by scanning every family of traces.
std::vector<BruteCover> min_trace_covers(const Graph& b, const Graph& a);

Graph random_graph(int n, double p, std::uint64_t seed);
Graph random_connected_graph(int n, double p, std::uint64_t seed);

}  // namespace oracle
