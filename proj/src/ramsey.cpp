#include "vramsey/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "vramsey/colorer.hpp"
#include "vramsey/randcon.hpp"

namespace vramsey {

namespace {

class ColoringSearch {
 public:
  ColoringSearch(int n, const std::vector<std::vector<int>>& hyperedges, int r, std::uint64_t budget)
      : n_(n), r_(r), budget_(budget), colors_(n, -1), closing_(n), constrained_(n, 0) {
    for (const auto& e : hyperedges) {
      closing_[e.back()].push_back(&e);
      for (int v : e) constrained_[v] = 1;
    }
  }

  // True if a coloring without monochromatic hyperedge was found.
  bool run() { return extend(0, -1); }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& colors() const { return colors_; }

 private:
  bool extend(int v, int max_used) {
    if (v == n_) return true;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (!constrained_[v]) {
      colors_[v] = 0;
      const bool ok = extend(v + 1, std::max(max_used, 0));
      if (!ok) colors_[v] = -1;
      return ok;
    }
    const int top = std::min(max_used + 1, r_ - 1);
    for (int c = 0; c <= top; ++c) {
      colors_[v] = c;
      if (!monochromatic_closed(v) && extend(v + 1, std::max(max_used, c))) return true;
      if (exhausted_) break;
    }
    colors_[v] = -1;
    return false;
  }

  // Hyperedges whose last vertex is v are fully colored once v is.
  bool monochromatic_closed(int v) const {
    const int c = colors_[v];
    for (const auto* e : closing_[v])
      if (std::all_of(e->begin(), e->end(), [&](int w) { return colors_[w] == c; })) return true;
    return false;
  }

  int n_;
  int r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> colors_;
  std::vector<std::vector<const std::vector<int>*>> closing_;
  std::vector<std::uint8_t> constrained_;
};

// C(n, k), saturating at `cap` + 1.
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long double value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > static_cast<long double>(cap) + 1) return cap + 1;
  }
  return static_cast<std::uint64_t>(std::llround(value));
}

}  // namespace

CopyHypergraph copy_hypergraph(const Graph& g, const Graph& a, std::size_t copy_limit) {
  CopyHypergraph h;
  h.n = g.order();
  const CopyEnumeration copies = enumerate_copies(a, g, {}, copy_limit);
  h.truncated = copies.truncated;
  std::set<std::vector<int>> seen;
  for (const Copy& c : copies.copies) {
    if (!seen.insert(c.vertices).second) continue;
    h.hyperedges.push_back(c.vertices);
    h.witnesses.push_back(c);
  }
  return h;
}

RamseyResult is_r_ramsey(const Graph& g, const Graph& a, int r, const RamseyOptions& options) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "number of colors must be positive");
  if (a.order() == 0 || a.has_isolated_vertex())
    throw Error(ErrorCode::UnsupportedPattern, "patterns with isolated vertices are not supported");

  RamseyResult out;
  const CopyHypergraph h = copy_hypergraph(g, a, options.copy_limit);
  out.hyperedges = h.hyperedges.size();
  if (h.truncated) {
    out.unknown_reason = "copy enumeration truncated";
    return out;
  }
  ColoringSearch search(g.order(), h.hyperedges, r, options.node_budget);
  const bool colorable = search.run();
  out.nodes = search.nodes();
  if (search.exhausted()) {
    out.unknown_reason = "coloring search ran out of budget";
    return out;
  }
  if (!colorable) {
    out.verdict = Verdict::Yes;
    return out;
  }
  VertexColoring witness = VertexColoring::from_colors(search.colors());
  if (witness.palette_size > r || !verify_coloring(g, a, witness).ok)
    throw Error(ErrorCode::Internal, "witness coloring failed verification");
  out.verdict = Verdict::No;
  out.witness = std::move(witness);
  return out;
}

int subset_size_for(double eps, int n) {
  if (!(eps > 0.0) || eps > 1.0) throw Error(ErrorCode::InvalidArgument, "eps must lie in (0, 1]");
  return static_cast<int>(std::floor(eps * n + 1e-9));
}

DensityResult is_eps_dense(const Graph& g, const Graph& a, double eps, const DensityOptions& options) {
  DensityResult out;
  out.subset_size = subset_size_for(eps, g.order());
  out.exact = options.exact;
  const int m = out.subset_size;
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "floor(eps * n) must be at least 1");

  if (!options.exact) {
    const SampledDensity s = estimate_density(g, a, m, options.trials, options.seed, options.jobs);
    out.trials = s.trials;
    out.hits = s.hits;
    out.fraction = s.fraction;
    return out;
  }

  const int n = g.order();
  if (binomial_capped(n, m, options.subset_cap) > options.subset_cap)
    throw Error(ErrorCode::SubsetSpaceTooLarge,
                "C(" + std::to_string(n) + ", " + std::to_string(m) + ") exceeds the subset cap");
  std::vector<int> pick(m);
  for (int i = 0; i < m; ++i) pick[i] = i;
  VertexMask mask(n, 0);
  out.dense = true;
  while (true) {
    std::fill(mask.begin(), mask.end(), 0);
    for (int v : pick) mask[v] = 1;
    ++out.subsets_checked;
    if (!contains_copy(a, g, &mask)) {
      out.dense = false;
      out.free_subset = pick;
      return out;
    }
    int i = m - 1;
    while (i >= 0 && pick[i] == n - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace vramsey
