#include "vramsey/colorer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <variant>

namespace vramsey {

namespace {

// Branch and bound for `target` pairwise disjoint sets.
class Packing {
 public:
  Packing(std::vector<std::vector<int>> sets, int universe, std::uint64_t budget)
      : sets_(std::move(sets)), used_(universe, 0), budget_(budget) {}

  Verdict run(int target) {
    if (target <= 0) return Verdict::Yes;
    if (static_cast<int>(sets_.size()) < target) return Verdict::No;
    if (search(0, target)) return Verdict::Yes;
    return exhausted_ ? Verdict::Unknown : Verdict::No;
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  bool search(std::size_t from, int remaining) {
    if (remaining == 0) return true;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    for (std::size_t i = from; i < sets_.size(); ++i) {
      if (static_cast<int>(sets_.size() - i) < remaining) return false;
      const auto& s = sets_[i];
      if (std::any_of(s.begin(), s.end(), [&](int v) { return used_[v] != 0; })) continue;
      for (int v : s) used_[v] = 1;
      chosen_.push_back(i);
      if (search(i + 1, remaining - 1)) return true;
      chosen_.pop_back();
      for (int v : s) used_[v] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  std::vector<std::vector<int>> sets_;
  std::vector<std::uint8_t> used_;
  std::vector<std::size_t> chosen_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

VertexMask full_mask(const Graph& g, const VertexMask* allowed) {
  return allowed ? *allowed : VertexMask(g.order(), 1);
}

// Outcome of one recursion level on the subgraph induced by an active mask.
struct Found {
  std::vector<int> map;  // B vertex -> G vertex, -1 outside the current target
};
struct Colored {
  std::vector<int> colors;  // G vertex -> color, -1 outside the active mask
  int palette = 0;
};
struct Undecided {
  std::string reason;
};
using LevelResult = std::variant<Found, Colored, Undecided>;

class Certifier {
 public:
  Certifier(const Graph& g, const Graph& a, const Graph& b, const ColorerOptions& options)
      : g_(g), a_(a), b_(b), options_(options) {}

  LevelResult solve(std::vector<const ForestPiece*> pieces, const VertexMask& active, int depth) {
    if (pieces.size() == 1) return base(*pieces.front(), active, depth);
    if (pairwise_disjoint(pieces)) return disjoint(pieces, active, depth);
    return glued(std::move(pieces), active, depth);
  }

  std::vector<LevelStats> levels;

 private:
  InducedSubgraph piece_graph(const ForestPiece& p) const { return edge_subgraph(b_, p.edges, p.vertices); }

  static bool pairwise_disjoint(const std::vector<const ForestPiece*>& pieces) {
    std::set<int> seen;
    for (const ForestPiece* p : pieces)
      for (int v : p->vertices)
        if (!seen.insert(v).second) return false;
    return true;
  }

  LevelStats stats(int depth, std::string kind, const std::vector<const ForestPiece*>& pieces,
                   const VertexMask& active) const {
    LevelStats s;
    s.depth = depth;
    s.kind = std::move(kind);
    s.pieces = static_cast<int>(pieces.size());
    std::set<int> vertices;
    for (const ForestPiece* p : pieces) vertices.insert(p->vertices.begin(), p->vertices.end());
    s.target_vertices = static_cast<int>(vertices.size());
    s.active_vertices = static_cast<int>(std::count(active.begin(), active.end(), 1));
    return s;
  }

  Colored single_color(const VertexMask& active) const {
    Colored c;
    c.colors.assign(g_.order(), -1);
    bool any = false;
    for (int v = 0; v < g_.order(); ++v)
      if (active[v]) {
        c.colors[v] = 0;
        any = true;
      }
    c.palette = any ? 1 : 0;
    return c;
  }

  // A single piece is a subgraph of A: an active part missing it misses A
  // too, so one color class is safe.
  LevelResult base(const ForestPiece& piece, const VertexMask& active, int depth) {
    LevelStats s = stats(depth, "base", {&piece}, active);
    const InducedSubgraph sub = piece_graph(piece);
    if (auto emb = find_embedding(sub.graph, g_, {.pin = std::nullopt, .allowed = &active})) {
      Found f{std::vector<int>(b_.order(), -1)};
      for (std::size_t i = 0; i < sub.original.size(); ++i) f.map[sub.original[i]] = emb->map[i];
      levels.push_back(s);
      return f;
    }
    if (contains_copy(a_, g_, &active))
      throw Error(ErrorCode::Internal, "active subgraph holds A but not a subgraph of A");
    Colored c = single_color(active);
    s.colors_used = c.palette;
    levels.push_back(s);
    return c;
  }

  // Pieces pairwise disjoint: either enough disjoint copies of A to host every
  // piece, or a maximal family whose copies are split into two classes each.
  LevelResult disjoint(const std::vector<const ForestPiece*>& pieces, const VertexMask& active, int depth) {
    LevelStats s = stats(depth, "disjoint", pieces, active);
    const std::vector<Embedding> family = greedy_disjoint_family(g_, a_, &active);
    s.family_size = static_cast<int>(family.size());
    if (family.size() >= pieces.size()) {
      Found f{std::vector<int>(b_.order(), -1)};
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        const ForestPiece& p = *pieces[j];
        for (std::size_t i = 0; i < p.vertices.size(); ++i)
          f.map[p.vertices[i]] = family[j].map[p.witness[i]];
      }
      levels.push_back(s);
      return f;
    }
    Colored c;
    c.colors.assign(g_.order(), -1);
    int next = 0;
    for (const Embedding& copy : family) {
      // Smallest vertex alone, the other a-1 vertices together: neither class
      // can hold all a vertices of a copy.
      const auto& vs = copy.image_vertices;
      c.colors[vs.front()] = next;
      for (std::size_t i = 1; i < vs.size(); ++i) c.colors[vs[i]] = next + 1;
      next += 2;
    }
    bool leftover = false;
    for (int v = 0; v < g_.order(); ++v)
      if (active[v] && c.colors[v] < 0) {
        c.colors[v] = next;
        leftover = true;
      }
    c.palette = next + (leftover ? 1 : 0);
    s.colors_used = c.palette;
    levels.push_back(s);
    return c;
  }

  LevelResult glued(std::vector<const ForestPiece*> pieces, const VertexMask& active, int depth) {
    // Last piece meeting the union of the others in exactly one vertex; moving
    // it to the end keeps the ordering valid.
    std::size_t chosen = pieces.size();
    int x = -1;
    for (std::size_t j = pieces.size(); j-- > 0 && chosen == pieces.size();) {
      std::set<int> others;
      for (std::size_t i = 0; i < pieces.size(); ++i)
        if (i != j) others.insert(pieces[i]->vertices.begin(), pieces[i]->vertices.end());
      int shared = 0;
      for (int v : pieces[j]->vertices)
        if (others.contains(v)) {
          ++shared;
          x = v;
        }
      if (shared == 1) chosen = j;
    }
    if (chosen == pieces.size()) throw Error(ErrorCode::Internal, "no piece attached at a single vertex");
    const ForestPiece& last = *pieces[chosen];
    std::vector<const ForestPiece*> rest;
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (i != chosen) rest.push_back(pieces[i]);

    LevelStats s = stats(depth, "glued", pieces, active);
    const int a = a_.order();
    const int b_cur = s.target_vertices;

    // Lexicographically smallest embedding of the last piece into A; its
    // image of x fixes the role k.
    const InducedSubgraph sub = piece_graph(last);
    std::optional<std::vector<int>> psi;
    Matcher(sub.graph, a_).for_each([&](std::span<const int> map) {
      if (!psi || std::lexicographical_compare(map.begin(), map.end(), psi->begin(), psi->end()))
        psi = std::vector<int>(map.begin(), map.end());
      return true;
    });
    if (!psi) throw Error(ErrorCode::Internal, "forest piece does not embed into A");
    const int x_local = static_cast<int>(std::find(sub.original.begin(), sub.original.end(), x) -
                                         sub.original.begin());
    const int role = (*psi)[x_local];
    s.role = role;
    s.attachment = x;

    // U: active vertices without b_cur - 1 copies in role k meeting only there.
    StarOptions star{options_.copy_limit, options_.packing_budget, &active};
    VertexMask in_u(g_.order(), 0);
    std::map<int, StarFamily> families;
    for (int v = 0; v < g_.order(); ++v) {
      if (!active[v]) continue;
      StarQuery q = star_family_at_least(g_, a_, role, v, b_cur - 1, star);
      if (q.verdict == Verdict::Unknown)
        return Undecided{"star family query at vertex " + std::to_string(v) + " ran out of budget"};
      if (q.verdict == Verdict::No) {
        in_u[v] = 1;
        ++s.u_size;
      } else {
        families.emplace(v, std::move(q.witness));
      }
    }

    // Color G[U] through the auxiliary digraph of maximal star families inside G[U].
    std::vector<int> u_vertices;
    std::vector<int> u_index(g_.order(), -1);
    for (int v = 0; v < g_.order(); ++v)
      if (in_u[v]) {
        u_index[v] = static_cast<int>(u_vertices.size());
        u_vertices.push_back(v);
      }
    s.out_degree_bound = (a - 1) * (b_cur - 2);
    std::vector<Edge> gamma_edges;
    for (int v : u_vertices) {
      VertexMask free = in_u;
      std::set<int> out;
      while (auto emb = find_embedding(a_, g_, {.pin = Pin{role, v}, .allowed = &free})) {
        for (int w : emb->image_vertices)
          if (w != v) {
            out.insert(w);
            free[w] = 0;
          }
      }
      s.max_out_degree = std::max(s.max_out_degree, static_cast<int>(out.size()));
      for (int w : out) gamma_edges.emplace_back(u_index[v], u_index[w]);
    }
    if (s.max_out_degree > s.out_degree_bound)
      throw Error(ErrorCode::Internal, "auxiliary digraph exceeds the out-degree bound");
    const DegeneracyColoring gamma_coloring =
        degeneracy_coloring(Graph(static_cast<int>(u_vertices.size()), gamma_edges));
    const int u_palette = gamma_coloring.coloring.palette_size;
    if (u_palette > 2 * s.out_degree_bound + 1)
      throw Error(ErrorCode::Internal, "degeneracy coloring exceeds its palette bound");
    s.colors_used = u_palette;
    const std::size_t slot = levels.size();
    levels.push_back(s);

    VertexMask remaining = active;
    for (int v : u_vertices) remaining[v] = 0;
    LevelResult inner = solve(std::move(rest), remaining, depth + 1);

    if (auto* colored = std::get_if<Colored>(&inner)) {
      for (int v = 0; v < g_.order(); ++v)
        if (colored->colors[v] >= 0) colored->colors[v] += u_palette;
      for (std::size_t i = 0; i < u_vertices.size(); ++i)
        colored->colors[u_vertices[i]] = gamma_coloring.coloring.colors[i];
      colored->palette += u_palette;
      return inner;
    }
    if (auto* found = std::get_if<Found>(&inner)) {
      // The image of x lies outside U, so b_cur - 1 copies through it meet only
      // there; the rest of the target has at most b_cur - 2 other vertices, so
      // one copy avoids them all.
      const int center = found->map[x];
      const auto it = families.find(center);
      if (it == families.end()) throw Error(ErrorCode::Internal, "completion vertex lies in U");
      std::set<int> image;
      for (int v : found->map)
        if (v >= 0 && v != center) image.insert(v);
      for (const Embedding& phi : it->second.copies) {
        const bool avoids = std::none_of(phi.image_vertices.begin(), phi.image_vertices.end(),
                                         [&](int w) { return image.contains(w); });
        if (!avoids) continue;
        for (std::size_t i = 0; i < sub.original.size(); ++i)
          found->map[sub.original[i]] = phi.map[(*psi)[i]];
        levels[slot].family_size = static_cast<int>(it->second.copies.size());
        return inner;
      }
      throw Error(ErrorCode::Internal, "no star copy completes the embedding");
    }
    return inner;
  }

  const Graph& g_;
  const Graph& a_;
  const Graph& b_;
  const ColorerOptions& options_;
};

}  // namespace

StarQuery star_family_at_least(const Graph& g, const Graph& a, int role, int center, int target,
                               const StarOptions& options) {
  if (target < 1) throw Error(ErrorCode::InvalidArgument, "target family size must be positive");
  StarQuery out;
  out.witness.center = center;
  out.witness.role = role;
  if (options.allowed && !(*options.allowed)[center]) return out;
  const CopyEnumeration copies =
      enumerate_copies(a, g, {.pin = Pin{role, center}, .allowed = options.allowed}, options.copy_limit);

  // Only the vertices besides the center matter for packing; copies sharing a
  // vertex set are interchangeable.
  std::map<std::vector<int>, std::size_t> by_set;
  for (std::size_t i = 0; i < copies.copies.size(); ++i) {
    std::vector<int> rest;
    for (int v : copies.copies[i].vertices)
      if (v != center) rest.push_back(v);
    by_set.emplace(std::move(rest), i);
  }
  std::vector<std::vector<int>> sets;
  std::vector<std::size_t> source;
  for (const auto& [set, i] : by_set) {
    sets.push_back(set);
    source.push_back(i);
  }
  Packing packing(std::move(sets), g.order(), options.packing_budget);
  const Verdict v = packing.run(target);
  if (v == Verdict::Yes) {
    out.verdict = Verdict::Yes;
    for (std::size_t k : packing.chosen()) out.witness.copies.push_back(copies.witnesses[source[k]]);
    return out;
  }
  // A negative answer over a truncated enumeration proves nothing.
  out.verdict = (v == Verdict::Unknown || copies.truncated) ? Verdict::Unknown : Verdict::No;
  return out;
}

std::vector<Embedding> greedy_disjoint_family(const Graph& g, const Graph& a, const VertexMask* allowed) {
  VertexMask free = full_mask(g, allowed);
  std::vector<Embedding> family;
  if (a.order() == 0) return family;
  while (auto emb = find_embedding(a, g, {.pin = std::nullopt, .allowed = &free})) {
    for (int v : emb->image_vertices) free[v] = 0;
    family.push_back(std::move(*emb));
  }
  return family;
}

DegeneracyColoring degeneracy_coloring(const Graph& gamma) {
  const int n = gamma.order();
  DegeneracyColoring out;
  std::vector<int> degree(n);
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < n; ++v) {
    degree[v] = gamma.degree(v);
    queue.emplace(degree[v], v);
  }
  std::vector<char> removed(n, 0);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    out.degeneracy = std::max(out.degeneracy, d);
    removed[v] = 1;
    out.removal_order.push_back(v);
    for (int w : gamma.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      queue.emplace(--degree[w], w);
    }
  }
  std::vector<int> colors(n, -1);
  std::vector<char> taken;
  for (auto it = out.removal_order.rbegin(); it != out.removal_order.rend(); ++it) {
    const int v = *it;
    taken.assign(gamma.degree(v) + 1, 0);
    for (int w : gamma.neighbors(v))
      if (colors[w] >= 0 && colors[w] < static_cast<int>(taken.size())) taken[colors[w]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    colors[v] = c;
  }
  out.coloring = VertexColoring::from_colors(std::move(colors));
  return out;
}

ColoringCheck verify_coloring(const Graph& g, const Graph& a, const VertexColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.order())
    throw Error(ErrorCode::InvalidArgument, "coloring does not cover every vertex");
  std::map<int, VertexMask> classes;
  for (int v = 0; v < g.order(); ++v) {
    if (c.colors[v] < 0) throw Error(ErrorCode::InvalidArgument, "negative color");
    auto [it, _] = classes.try_emplace(c.colors[v], VertexMask(g.order(), 0));
    it->second[v] = 1;
  }
  ColoringCheck out;
  for (const auto& [color, mask] : classes) {
    if (auto emb = find_embedding(a, g, {.pin = std::nullopt, .allowed = &mask})) {
      out.ok = false;
      out.monochromatic = Copy{emb->image_vertices, emb->image_edges};
      return out;
    }
  }
  return out;
}

long long ramsey_color_bound(int ell, int a, int b) {
  return static_cast<long long>(ell) * (2LL * (a - 1) * (b - 2) + 1);
}

RamseyCertificate find_b_or_color(const Graph& g, const Graph& a, const Graph& b,
                                  const ColorerOptions& options) {
  std::optional<ForestDecomposition> forest =
      forest_decomposition(b, a, {.node_budget = options.forest_budget});
  if (!forest) throw Error(ErrorCode::NotDegenerate, "B is not A-degenerate");

  RamseyCertificate cert;
  cert.a = a.order();
  cert.b = b.order();
  cert.ell = static_cast<int>(forest->size());
  cert.decomposition = std::move(*forest);
  if (cert.a < 2)
    throw Error(ErrorCode::UnsupportedPattern, "the pattern needs at least two vertices");

  auto accept_embedding = [&](Embedding e, std::string route) {
    if (!is_embedding(b, g, e.map)) throw Error(ErrorCode::Internal, "embedding failed verification");
    cert.branch = CertificateBranch::Embedding;
    cert.embedding = std::move(e);
    cert.route = std::move(route);
    cert.verified = true;
    return cert;
  };
  auto accept_coloring = [&](VertexColoring c, std::string route) {
    if (c.palette_size > cert.color_bound || !verify_coloring(g, a, c).ok)
      throw Error(ErrorCode::Internal, "coloring failed verification");
    cert.branch = CertificateBranch::Coloring;
    cert.coloring = std::move(c);
    cert.route = std::move(route);
    cert.verified = true;
    return cert;
  };

  if (cert.b < 3) {
    cert.color_bound = std::max(1LL, ramsey_color_bound(cert.ell, cert.a, std::max(cert.b, 2)));
    if (auto e = find_embedding(b, g)) return accept_embedding(std::move(*e), "trivial");
    return accept_coloring(VertexColoring::from_colors(std::vector<int>(g.order(), 0)), "trivial");
  }
  cert.color_bound = ramsey_color_bound(cert.ell, cert.a, cert.b);

  Certifier certifier(g, a, b, options);
  std::vector<const ForestPiece*> pieces;
  for (const ForestPiece& p : cert.decomposition.pieces) pieces.push_back(&p);
  LevelResult result = certifier.solve(std::move(pieces), VertexMask(g.order(), 1), 0);
  cert.levels = std::move(certifier.levels);

  if (auto* found = std::get_if<Found>(&result))
    return accept_embedding(make_embedding(b, found->map), "construction");

  // The recursion may color a graph that still contains B; a direct search
  // settles that case with an embedding.
  if (auto e = find_embedding(b, g)) return accept_embedding(std::move(*e), "direct-search");
  if (auto* colored = std::get_if<Colored>(&result))
    return accept_coloring(VertexColoring::from_colors(std::move(colored->colors)), "construction");

  cert.branch = CertificateBranch::Unknown;
  cert.unknown_reason = std::get<Undecided>(result).reason;
  return cert;
}

}  // namespace vramsey
