#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "vramsey/graph.hpp"

namespace vramsey {

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph empty_graph(int n);
// Two triangles sharing vertex 2.
Graph bowtie_graph();
// K4 minus the edge {2,3}.
Graph diamond_graph();
// Vertex-disjoint union, components relabeled consecutively in argument order.
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(const Graph& a, const Graph& b);

// Uniform graph with exactly m edges.
Graph random_graph_nm(int n, int m, std::uint64_t seed);
// Each edge independently with probability p.
Graph random_graph_np(int n, double p, std::uint64_t seed);

// Stream seed for item `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

using Rng = std::mt19937_64;

}  // namespace vramsey
