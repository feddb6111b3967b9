#include "vramsey/embed.hpp"

#include <algorithm>
#include <map>

#include "vramsey/error.hpp"

namespace vramsey {

Matcher::Matcher(const Graph& pattern, const Graph& host, MatchOptions options)
    : pattern_(pattern), host_(host), pin_(options.pin), allowed_(options.allowed) {
  const int pn = pattern.order();
  if (allowed_ && static_cast<int>(allowed_->size()) != host.order())
    throw Error(ErrorCode::InvalidArgument, "vertex mask size does not match host order");
  if (pin_) {
    if (pin_->role < 0 || pin_->role >= pn)
      throw Error(ErrorCode::InvalidVertex, "pinned role outside the pattern");
    if (pin_->vertex < 0 || pin_->vertex >= host.order())
      throw Error(ErrorCode::InvalidVertex, "pinned vertex outside the host");
  }
  map_.assign(pn, -1);
  used_.assign(host.order(), 0);
  if (pn > host.order() || pattern.size() > host.size()) {
    infeasible_ = true;
    return;
  }

  std::vector<int> placed_neighbors(pn, 0);
  std::vector<char> placed(pn, 0);
  std::vector<int> position(pn, -1);
  for (int step = 0; step < pn; ++step) {
    int best = -1;
    if (step == 0 && pin_) {
      best = pin_->role;
    } else {
      for (int v = 0; v < pn; ++v) {
        if (placed[v]) continue;
        if (best < 0 || placed_neighbors[v] > placed_neighbors[best] ||
            (placed_neighbors[v] == placed_neighbors[best] && pattern.degree(v) > pattern.degree(best)))
          best = v;
      }
    }
    placed[best] = 1;
    position[best] = step;
    order_.push_back(best);
    std::vector<int> parents;
    for (int w : pattern.neighbors(best)) {
      if (placed[w] && w != best) parents.push_back(position[w]);
      ++placed_neighbors[w];
    }
    std::sort(parents.begin(), parents.end());
    parents_.push_back(std::move(parents));
  }
}

bool is_embedding(const Graph& pattern, const Graph& host, std::span<const int> map) {
  if (static_cast<int>(map.size()) != pattern.order()) return false;
  std::vector<char> seen(host.order(), 0);
  for (int h : map) {
    if (h < 0 || h >= host.order() || seen[h]) return false;
    seen[h] = 1;
  }
  return std::all_of(pattern.edges().begin(), pattern.edges().end(),
                     [&](const Edge& e) { return host.adjacent(map[e.u], map[e.v]); });
}

Copy copy_of(const Graph& pattern, std::span<const int> map) {
  Copy c;
  c.vertices.assign(map.begin(), map.end());
  std::sort(c.vertices.begin(), c.vertices.end());
  c.edges.reserve(pattern.size());
  for (const Edge& e : pattern.edges()) c.edges.emplace_back(map[e.u], map[e.v]);
  std::sort(c.edges.begin(), c.edges.end());
  return c;
}

Embedding make_embedding(const Graph& pattern, std::span<const int> map) {
  Copy c = copy_of(pattern, map);
  return {pattern.order(), std::vector<int>(map.begin(), map.end()), std::move(c.vertices),
          std::move(c.edges)};
}

std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host, MatchOptions options) {
  std::optional<Embedding> found;
  Matcher(pattern, host, options).for_each([&](std::span<const int> map) {
    found = make_embedding(pattern, map);
    return false;
  });
  return found;
}

bool contains_copy(const Graph& pattern, const Graph& host, const VertexMask* allowed) {
  bool found = false;
  Matcher(pattern, host, {.pin = std::nullopt, .allowed = allowed}).for_each([&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

std::uint64_t count_embeddings(const Graph& pattern, const Graph& host, MatchOptions options) {
  std::uint64_t count = 0;
  Matcher(pattern, host, options).for_each([&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t automorphism_count(const Graph& g) { return count_embeddings(g, g); }

CopyEnumeration enumerate_copies(const Graph& pattern, const Graph& host, MatchOptions options,
                                 std::size_t limit) {
  std::map<Copy, Embedding> found;
  CopyEnumeration out;
  Matcher(pattern, host, options).for_each([&](std::span<const int> map) {
    Copy c = copy_of(pattern, map);
    if (found.contains(c)) return true;
    if (found.size() == limit) {
      out.truncated = true;
      return false;
    }
    found.emplace(std::move(c), make_embedding(pattern, map));
    return true;
  });
  out.copies.reserve(found.size());
  out.witnesses.reserve(found.size());
  for (auto& [c, e] : found) {
    out.copies.push_back(c);
    out.witnesses.push_back(std::move(e));
  }
  return out;
}

}  // namespace vramsey
