#include "vramsey/generators.hpp"

#include <algorithm>

#include "vramsey/error.hpp"

namespace vramsey {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n); }

Graph bowtie_graph() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

Graph diamond_graph() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph disjoint_union(std::span<const Graph> parts) {
  int offset = 0;
  std::vector<Edge> edges;
  for (const Graph& g : parts) {
    for (const Edge& e : g.edges()) edges.emplace_back(e.u + offset, e.v + offset);
    offset += g.order();
  }
  return Graph(offset, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const Graph parts[] = {a, b};
  return disjoint_union(parts);
}

Graph random_graph_nm(int n, int m, std::uint64_t seed) {
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > pairs) throw Error(ErrorCode::InvalidArgument, "edge count out of range");
  std::vector<Edge> all;
  all.reserve(pairs);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) all.emplace_back(i, j);
  Rng rng(seed);
  for (int i = 0; i < m; ++i) {
    std::uniform_int_distribution<long long> pick(i, pairs - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  all.resize(m);
  return Graph(n, all);
}

Graph random_graph_np(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

}  // namespace vramsey
