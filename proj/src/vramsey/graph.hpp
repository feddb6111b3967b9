#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vramsey {

// Undirected edge, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Membership mask over host vertices; a nonzero entry marks an allowed vertex.
using VertexMask = std::vector<std::uint8_t>;

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Duplicate edges are merged; loops and out-of-range endpoints throw.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  // Sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Sorted ascending.
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  bool has_isolated_vertex() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build(std::vector<Edge> edges);

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;
};

struct VertexColoring {
  std::vector<int> colors;  // colors[v] is the color of vertex v
  int palette_size = 0;     // number of distinct values in colors

  static VertexColoring from_colors(std::vector<int> colors);
};

// Result of taking an induced subgraph: vertex i of `graph` is `original[i]`.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Subgraph spanned by an explicit edge set, relabeled in ascending id order.
InducedSubgraph edge_subgraph(const Graph& g, std::span<const Edge> edges,
                              std::span<const int> extra_vertices = {});

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);
// Edge list when the text starts with a digit, '#' or "n=", graph6 otherwise.
Graph parse_graph_text(std::string_view text);

}  // namespace vramsey
