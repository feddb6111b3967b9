#include "vramsey/degeneracy.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "vramsey/embed.hpp"
#include "vramsey/error.hpp"

namespace vramsey {

namespace {

std::size_t intersection_size(const std::vector<int>& x, const std::vector<int>& y) {
  std::size_t count = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<int> set_union(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out;
  out.reserve(x.size() + y.size());
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

// A block or an isolated vertex of B; pieces are unions of items.
struct Item {
  std::vector<int> vertices;
  std::vector<Edge> edges;
};

struct Group {
  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::vector<int> witness;
};

class ForestSearch {
 public:
  ForestSearch(const Graph& b, const Graph& a, std::uint64_t budget) : b_(b), a_(a), budget_(budget) {
    const BlockDecomposition blocks = block_decomposition(b);
    for (const Block& blk : blocks.blocks) items_.push_back({blk.vertices, blk.edges});
    for (int v : blocks.isolated_vertices) items_.push_back({{v}, {}});
  }

  ForestDecomposition run() {
    ForestDecomposition out;
    if (items_.empty()) return out;
    const std::size_t count = items_.size();
    if (count <= 64) {
      std::size_t lower = std::max<std::size_t>(1, (b_.order() + a_.order() - 1) / std::max(1, a_.order()));
      if (a_.size() > 0) lower = std::max(lower, (b_.size() + a_.size() - 1) / a_.size());
      for (std::size_t ell = lower; ell <= count && !exhausted_; ++ell) {
        std::vector<std::uint64_t> groups;
        dfs(0, groups, ell);
        if (best_) break;
      }
    } else {
      exhausted_ = true;
    }
    out.search_nodes = nodes_;
    if (best_ && !exhausted_) {
      out.pieces = std::move(*best_);
      return out;
    }
    // Budget ran out: the best found so far has minimum size only if every
    // smaller size was refuted, which is the case when one was found at all.
    out.search_complete = false;
    if (best_) {
      out.pieces = std::move(*best_);
      return out;
    }
    out.minimal = false;
    out.pieces = fallback();
    return out;
  }

 private:
  const Group* group(std::uint64_t mask) {
    if (auto it = cache_.find(mask); it != cache_.end()) return it->second ? &*it->second : nullptr;
    std::vector<int> vertices;
    std::vector<Edge> edges;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const Item& item = items_[std::countr_zero(m)];
      vertices.insert(vertices.end(), item.vertices.begin(), item.vertices.end());
      edges.insert(edges.end(), item.edges.begin(), item.edges.end());
    }
    std::optional<Group> result = make_group(std::move(vertices), std::move(edges));
    auto [it, _] = cache_.emplace(mask, std::move(result));
    return it->second ? &*it->second : nullptr;
  }

  std::optional<Group> make_group(std::vector<int> vertices, std::vector<Edge> edges) const {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(edges.begin(), edges.end());
    if (static_cast<int>(vertices.size()) > a_.order() || edges.size() > a_.size()) return std::nullopt;
    const InducedSubgraph sub = edge_subgraph(b_, edges, vertices);
    std::optional<Embedding> emb = find_embedding(sub.graph, a_);
    if (!emb) return std::nullopt;
    return Group{std::move(vertices), std::move(edges), std::move(emb->map)};
  }

  void dfs(std::size_t index, std::vector<std::uint64_t>& groups, std::size_t ell) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (index == items_.size()) {
      consider(groups);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << index;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (!group(groups[g] | bit)) continue;
      groups[g] |= bit;
      dfs(index + 1, groups, ell);
      groups[g] &= ~bit;
      if (exhausted_) return;
    }
    if (groups.size() < ell && group(bit)) {
      groups.push_back(bit);
      dfs(index + 1, groups, ell);
      groups.pop_back();
    }
  }

  // Lexicographically smallest valid ordering of `groups`, if any exists.
  // Removing a group that meets the union of all others in at most one vertex
  // never hurts, so completability of a suffix is decided greedily.
  static std::optional<std::vector<std::size_t>> best_order(const std::vector<const Group*>& groups) {
    const std::size_t k = groups.size();
    std::vector<std::size_t> by_vertices(k);
    for (std::size_t i = 0; i < k; ++i) by_vertices[i] = i;
    std::sort(by_vertices.begin(), by_vertices.end(), [&](std::size_t x, std::size_t y) {
      return groups[x]->vertices < groups[y]->vertices;
    });

    auto completable = [&](const std::vector<int>& prefix, std::vector<char> remaining) {
      std::size_t left = std::count(remaining.begin(), remaining.end(), 1);
      while (left > 0) {
        bool progressed = false;
        for (std::size_t i = 0; i < k && !progressed; ++i) {
          if (!remaining[i]) continue;
          std::vector<int> others = prefix;
          for (std::size_t j = 0; j < k; ++j)
            if (j != i && remaining[j]) others = set_union(others, groups[j]->vertices);
          if (intersection_size(groups[i]->vertices, others) <= 1) {
            remaining[i] = 0;
            --left;
            progressed = true;
          }
        }
        if (!progressed) return false;
      }
      return true;
    };

    std::vector<char> remaining(k, 1);
    if (!completable({}, remaining)) return std::nullopt;
    std::vector<std::size_t> order;
    std::vector<int> prefix;
    for (std::size_t step = 0; step < k; ++step) {
      for (std::size_t i : by_vertices) {
        if (!remaining[i] || intersection_size(groups[i]->vertices, prefix) > 1) continue;
        remaining[i] = 0;
        std::vector<int> extended = set_union(prefix, groups[i]->vertices);
        if (completable(extended, remaining)) {
          order.push_back(i);
          prefix = std::move(extended);
          break;
        }
        remaining[i] = 1;
      }
    }
    return order;
  }

  std::vector<ForestPiece> assemble(const std::vector<const Group*>& groups,
                                    const std::vector<std::size_t>& order) const {
    std::vector<ForestPiece> pieces;
    std::vector<int> prefix;
    for (std::size_t i : order) {
      const Group& g = *groups[i];
      ForestPiece piece{g.vertices, g.edges, std::nullopt, g.witness};
      std::vector<int> shared;
      std::set_intersection(g.vertices.begin(), g.vertices.end(), prefix.begin(), prefix.end(),
                            std::back_inserter(shared));
      if (shared.size() == 1) piece.attachment = shared.front();
      prefix = set_union(prefix, g.vertices);
      pieces.push_back(std::move(piece));
    }
    return pieces;
  }

  void consider(const std::vector<std::uint64_t>& masks) {
    std::vector<const Group*> groups;
    for (std::uint64_t m : masks) groups.push_back(group(m));
    const auto order = best_order(groups);
    if (!order) return;
    std::vector<ForestPiece> pieces = assemble(groups, *order);
    if (!best_ || key(pieces) < key(*best_)) best_ = std::move(pieces);
  }

  static std::vector<std::vector<int>> key(const std::vector<ForestPiece>& pieces) {
    std::vector<std::vector<int>> k;
    for (const ForestPiece& p : pieces) k.push_back(p.vertices);
    return k;
  }

  // One piece per block or isolated vertex, ordered along the block-cut forest.
  std::vector<ForestPiece> fallback() const {
    std::vector<Group> owned;
    for (const Item& item : items_) {
      std::optional<Group> g = make_group(item.vertices, item.edges);
      if (!g) throw Error(ErrorCode::Internal, "block does not embed although B is A-degenerate");
      owned.push_back(std::move(*g));
    }
    std::vector<const Group*> groups;
    for (const Group& g : owned) groups.push_back(&g);
    const auto order = best_order(groups);
    if (!order) throw Error(ErrorCode::Internal, "block-cut forest admits no valid ordering");
    return assemble(groups, *order);
  }

  const Graph& b_;
  const Graph& a_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Item> items_;
  std::unordered_map<std::uint64_t, std::optional<Group>> cache_;
  std::optional<std::vector<ForestPiece>> best_;
};

}  // namespace

DegeneracyCheck is_a_degenerate(const Graph& b, const Graph& a) {
  DegeneracyCheck out;
  for (const Block& blk : block_decomposition(b).blocks) {
    const InducedSubgraph sub = edge_subgraph(b, blk.edges);
    if (!contains_copy(sub.graph, a)) {
      out.degenerate = false;
      out.witness = blk;
      return out;
    }
  }
  // Isolated vertices embed as long as A has a vertex.
  if (a.order() == 0 && b.order() > 0) {
    out.degenerate = false;
    out.witness = Block{{0}, {}};
  }
  return out;
}

std::optional<ForestDecomposition> forest_decomposition(const Graph& b, const Graph& a,
                                                        ForestOptions options) {
  if (!is_a_degenerate(b, a).degenerate) return std::nullopt;
  return ForestSearch(b, a, options.node_budget).run();
}

bool verify_forest(const Graph& b, const Graph& a, const ForestDecomposition& d) {
  std::vector<Edge> all_edges;
  std::vector<int> covered;
  std::vector<int> prefix;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const ForestPiece& p = d.pieces[i];
    if (!std::is_sorted(p.vertices.begin(), p.vertices.end())) return false;
    for (const Edge& e : p.edges) {
      if (e.v >= b.order() || !b.adjacent(e.u, e.v)) return false;
      if (!std::binary_search(p.vertices.begin(), p.vertices.end(), e.u) ||
          !std::binary_search(p.vertices.begin(), p.vertices.end(), e.v))
        return false;
      all_edges.push_back(e);
    }
    std::vector<int> shared;
    std::set_intersection(p.vertices.begin(), p.vertices.end(), prefix.begin(), prefix.end(),
                          std::back_inserter(shared));
    if (shared.size() > 1) return false;
    if (i > 0 && (shared.size() == 1) != p.attachment.has_value()) return false;
    if (p.attachment && shared.front() != *p.attachment) return false;
    prefix = set_union(prefix, p.vertices);

    // Witness: vertices[j] -> witness[j] must be an embedding into A.
    if (p.witness.size() != p.vertices.size()) return false;
    const InducedSubgraph sub = edge_subgraph(b, p.edges, p.vertices);
    if (sub.original != p.vertices || !is_embedding(sub.graph, a, p.witness)) return false;
  }
  std::sort(all_edges.begin(), all_edges.end());
  if (std::adjacent_find(all_edges.begin(), all_edges.end()) != all_edges.end()) return false;
  if (all_edges != b.edges()) return false;
  return static_cast<int>(prefix.size()) == b.order();
}

Core extract_core(const Graph& b, const Graph& a) {
  std::optional<Core> best;
  for (const Block& blk : block_decomposition(b).blocks) {
    InducedSubgraph sub = edge_subgraph(b, blk.edges);
    if (contains_copy(sub.graph, a)) continue;
    if (!best || sub.graph.order() < best->graph.order())
      best = Core{std::move(sub.graph), std::move(sub.original)};
  }
  if (!best) throw Error(ErrorCode::IsDegenerate, "every block embeds into the pattern");
  return std::move(*best);
}

}  // namespace vramsey
