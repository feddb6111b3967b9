#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vramsey/graph.hpp"

namespace vramsey {

inline constexpr std::size_t kDefaultCopyLimit = 100000;

// Forces pattern vertex `role` onto host vertex `vertex`.
struct Pin {
  int role = 0;
  int vertex = 0;
};

// Injective, edge-preserving map from pattern vertices into a host.
struct Embedding {
  int pattern_n = 0;
  std::vector<int> map;
  std::vector<int> image_vertices;  // sorted
  std::vector<Edge> image_edges;    // sorted
};

// The image subgraph of an embedding. Embeddings that differ by a pattern
// automorphism give the same Copy.
struct Copy {
  std::vector<int> vertices;  // sorted
  std::vector<Edge> edges;    // sorted

  friend auto operator<=>(const Copy&, const Copy&) = default;
};

struct MatchOptions {
  std::optional<Pin> pin;
  // Restricts the search to host vertices with a nonzero entry; null means all.
  const VertexMask* allowed = nullptr;
};

// Non-induced subgraph matcher. The pattern is explored in a connected order
// that greedily maximizes back-edges to already placed vertices; candidates are
// drawn from the neighborhood of a placed neighbor and filtered by degree and
// adjacency to every placed neighbor.
class Matcher {
 public:
  Matcher(const Graph& pattern, const Graph& host, MatchOptions options = {});

  // Calls visit(std::span<const int> map) for each embedding in a deterministic
  // order until it returns false. Returns false iff the visitor stopped early.
  template <class Visit>
  bool for_each(Visit&& visit) {
    if (infeasible_) return true;
    return extend(0, visit);
  }

 private:
  template <class Visit>
  bool extend(std::size_t depth, Visit& visit) {
    if (depth == order_.size()) return visit(std::span<const int>(map_));
    const int pv = order_[depth];
    auto attempt = [&](int h) -> bool {
      if (used_[h] || (allowed_ && !(*allowed_)[h])) return true;
      if (host_.degree(h) < pattern_.degree(pv)) return true;
      for (int q : parents_[depth])
        if (!host_.adjacent(h, map_[order_[q]])) return true;
      map_[pv] = h;
      used_[h] = 1;
      const bool go_on = extend(depth + 1, visit);
      used_[h] = 0;
      map_[pv] = -1;
      return go_on;
    };
    if (depth == 0 && pin_) return attempt(pin_->vertex);
    if (!parents_[depth].empty()) {
      const int anchor = map_[order_[parents_[depth].front()]];
      for (int h : host_.neighbors(anchor))
        if (!attempt(h)) return false;
      return true;
    }
    for (int h = 0; h < host_.order(); ++h)
      if (!attempt(h)) return false;
    return true;
  }

  const Graph& pattern_;
  const Graph& host_;
  std::optional<Pin> pin_;
  const VertexMask* allowed_;
  bool infeasible_ = false;
  std::vector<int> order_;
  std::vector<std::vector<int>> parents_;  // earlier positions adjacent to position i
  std::vector<int> map_;
  std::vector<std::uint8_t> used_;
};

bool is_embedding(const Graph& pattern, const Graph& host, std::span<const int> map);
Embedding make_embedding(const Graph& pattern, std::span<const int> map);
Copy copy_of(const Graph& pattern, std::span<const int> map);

std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host,
                                        MatchOptions options = {});
bool contains_copy(const Graph& pattern, const Graph& host, const VertexMask* allowed = nullptr);
std::uint64_t count_embeddings(const Graph& pattern, const Graph& host, MatchOptions options = {});
std::uint64_t automorphism_count(const Graph& g);

struct CopyEnumeration {
  std::vector<Copy> copies;            // sorted
  std::vector<Embedding> witnesses;    // witnesses[i] realizes copies[i] (honoring the pin)
  bool truncated = false;              // more than `limit` copies exist
};

CopyEnumeration enumerate_copies(const Graph& pattern, const Graph& host, MatchOptions options = {},
                                 std::size_t limit = kDefaultCopyLimit);

}  // namespace vramsey
