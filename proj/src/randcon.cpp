#include "vramsey/randcon.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "vramsey/error.hpp"
#include "vramsey/generators.hpp"
#include "vramsey/parallel.hpp"

namespace vramsey {

namespace {

// Above this many copies, drawing every copy of A on [n] is not attempted.
constexpr std::uint64_t kExhaustiveCopyCap = 4'000'000;

std::vector<int> random_injection(int a, int n, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> map;
  map.reserve(a);
  while (static_cast<int>(map.size()) < a) {
    const int v = pick(rng);
    if (std::find(map.begin(), map.end(), v) == map.end()) map.push_back(v);
  }
  return map;
}

std::vector<int> random_subset(int n, long long size, Rng& rng) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (long long i = 0; i < size; ++i) {
    std::uniform_int_distribution<long long> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(size);
  return pool;
}

}  // namespace

ConstructionParams make_params(int n, const Graph& a, double eps, int k_edges, std::uint64_t seed,
                               double deletion_c, std::optional<double> p_override) {
  ConstructionParams p;
  p.n = n;
  p.a = a.order();
  p.eps = eps;
  p.k_edges = k_edges;
  p.seed = seed;
  p.deletion_c = deletion_c;
  if (p.a < 2) throw Error(ErrorCode::ParamOutOfRange, "pattern needs at least two vertices");
  if (!(eps > 0.0)) throw Error(ErrorCode::ParamOutOfRange, "eps must be positive");
  if (n < p.a) throw Error(ErrorCode::ParamOutOfRange, "n must be at least |V(A)|");
  if (!(deletion_c > 0.0)) throw Error(ErrorCode::ParamOutOfRange, "deletion constant must be positive");

  p.p_raw = p_override ? *p_override : std::pow(static_cast<double>(n), 1.0 - p.a + eps);
  if (!(p.p_raw >= 0.0)) throw Error(ErrorCode::ParamOutOfRange, "copy probability must be non-negative");
  p.p_clamped = p.p_raw > 1.0;
  p.p = std::min(p.p_raw, 1.0);
  p.delta0 = eps / (2.0 * (p.a - 1));
  p.delta = p.delta0 / 2.0;
  p.subset_size = static_cast<long long>(std::floor(std::pow(static_cast<double>(n), 1.0 - p.delta0) + 1e-9));
  if (p.subset_size < p.a) throw Error(ErrorCode::ParamOutOfRange, "subset size N is below |V(A)|");
  p.eps_below_half_inverse_k = k_edges <= 0 || eps < 1.0 / (2.0 * k_edges);

  p.aut = automorphism_count(a);
  unsigned __int128 falling = 1;
  for (int i = 0; i < p.a; ++i) {
    falling *= static_cast<unsigned>(n - i);
    if (falling > (static_cast<unsigned __int128>(1) << 62) * p.aut)
      throw Error(ErrorCode::ParamOutOfRange, "number of copies of A on [n] is not representable");
  }
  p.total_copies = static_cast<std::uint64_t>(falling / p.aut);
  return p;
}

CopyHypergraphSample sample_copy_hypergraph(const ConstructionParams& params, const Graph& a) {
  if (a.order() != params.a) throw Error(ErrorCode::InvalidArgument, "pattern does not match parameters");
  CopyHypergraphSample sample;
  sample.params = params;
  Rng rng(params.seed);
  const std::uint64_t total = params.total_copies;
  if (params.p <= 0.0 || total == 0) return sample;
  std::uint64_t k = total;
  if (params.p < 1.0) {
    std::binomial_distribution<long long> draw(static_cast<long long>(total), params.p);
    k = static_cast<std::uint64_t>(draw(rng));
  }
  sample.drawn = k;
  if (k == 0) return sample;

  if (2 * k > total && total <= kExhaustiveCopyCap) {
    CopyEnumeration all = enumerate_copies(a, complete_graph(params.n), {}, total + 1);
    if (all.copies.size() != total) throw Error(ErrorCode::Internal, "copy count disagrees with T");
    for (std::uint64_t i = 0; i < k && k < total; ++i) {
      std::uniform_int_distribution<std::uint64_t> pick(i, total - 1);
      std::swap(all.copies[i], all.copies[pick(rng)]);
    }
    all.copies.resize(k);
    std::sort(all.copies.begin(), all.copies.end());
    sample.copies = std::move(all.copies);
    return sample;
  }

  // Every copy has exactly aut(A) injections onto it, so a uniform injection
  // yields a uniform copy; duplicates are redrawn.
  std::set<Copy> chosen;
  while (chosen.size() < k) chosen.insert(copy_of(a, random_injection(params.a, params.n, rng)));
  sample.copies.assign(chosen.begin(), chosen.end());
  return sample;
}

Graph union_graph(const CopyHypergraphSample& sample) {
  std::vector<Edge> edges;
  for (const Copy& c : sample.copies) edges.insert(edges.end(), c.edges.begin(), c.edges.end());
  return Graph(sample.params.n, edges);
}

std::vector<TraceCover> enumerate_min_trace_covers(const Graph& b_prime, const Graph& a,
                                                   std::optional<int> max_ell) {
  const int m = static_cast<int>(b_prime.size());
  if (m > kMaxCoverEdges)
    throw Error(ErrorCode::TooLarge, "trace cover enumeration supports at most " +
                                         std::to_string(kMaxCoverEdges) + " edges");
  if (m == 0) return {};
  const auto& edges = b_prime.edges();

  // Traces: nonempty edge subsets whose spanned subgraph embeds into A.
  std::vector<std::uint32_t> traces;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    if (std::popcount(mask) > static_cast<int>(a.size())) continue;
    std::vector<Edge> chosen;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1U) chosen.push_back(edges[i]);
    const InducedSubgraph sub = edge_subgraph(b_prime, chosen);
    if (sub.graph.order() > a.order()) continue;
    if (contains_copy(sub.graph, a)) traces.push_back(mask);
  }

  const std::uint32_t full = (1U << m) - 1;
  std::set<std::vector<std::size_t>> found;
  std::vector<std::size_t> chosen;

  // Branch on the traces covering the lowest uncovered edge. A chosen trace
  // whose edges are all covered by the others stays redundant forever, so such
  // branches are cut; every surviving leaf is an inclusion-minimal cover.
  auto redundant = [&] {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      std::uint32_t others = 0;
      for (std::size_t j = 0; j < chosen.size(); ++j)
        if (j != i) others |= traces[chosen[j]];
      if ((traces[chosen[i]] & ~others) == 0) return true;
    }
    return false;
  };
  auto search = [&](auto&& self, std::uint32_t covered) -> void {
    if (covered == full) {
      std::vector<std::size_t> key = chosen;
      std::sort(key.begin(), key.end());
      found.insert(std::move(key));
      return;
    }
    if (max_ell && static_cast<int>(chosen.size()) >= *max_ell) return;
    const int edge = std::countr_one(covered);
    for (std::size_t t = 0; t < traces.size(); ++t) {
      if (!(traces[t] >> edge & 1U)) continue;
      chosen.push_back(t);
      if (!redundant()) self(self, covered | traces[t]);
      chosen.pop_back();
    }
  };
  search(search, 0);

  std::vector<std::vector<std::size_t>> keys(found.begin(), found.end());
  std::stable_sort(keys.begin(), keys.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::vector<TraceCover> covers;
  for (const auto& key : keys) {
    TraceCover cover;
    for (std::size_t t : key) {
      Trace trace;
      for (int i = 0; i < m; ++i)
        if (traces[t] >> i & 1U) {
          trace.edges.push_back(edges[i]);
          trace.vertices.push_back(edges[i].u);
          trace.vertices.push_back(edges[i].v);
        }
      std::sort(trace.vertices.begin(), trace.vertices.end());
      trace.vertices.erase(std::unique(trace.vertices.begin(), trace.vertices.end()), trace.vertices.end());
      cover.traces.push_back(std::move(trace));
    }
    for (std::size_t i = 0; i < cover.traces.size(); ++i) {
      std::set<int> others;
      for (std::size_t j = 0; j < cover.traces.size(); ++j)
        if (j != i) others.insert(cover.traces[j].vertices.begin(), cover.traces[j].vertices.end());
      const auto& vs = cover.traces[i].vertices;
      cover.v_sizes.push_back(static_cast<int>(vs.size()));
      cover.overlap_sizes.push_back(
          static_cast<int>(std::count_if(vs.begin(), vs.end(), [&](int v) { return others.contains(v); })));
      cover.sum_v += cover.v_sizes.back();
    }
    covers.push_back(std::move(cover));
  }
  return covers;
}

CoverInequalityReport verify_cover_inequality(const Graph& b_prime, const Graph& a) {
  CoverInequalityReport report;
  report.b = b_prime.order();
  const std::vector<TraceCover> covers = enumerate_min_trace_covers(b_prime, a);
  report.covers = covers.size();
  for (const TraceCover& cover : covers) {
    const int ell = cover.size();
    if (ell < 2) {
      ++report.single_trace_covers;
      continue;
    }
    if (!report.min_multi_cover_size || ell < *report.min_multi_cover_size) report.min_multi_cover_size = ell;
    const bool overlaps = std::all_of(cover.overlap_sizes.begin(), cover.overlap_sizes.end(),
                                      [](int s) { return s >= 2; });
    if (!overlaps) {
      report.all_multi_covers_overlap_twice = false;
      continue;
    }
    ++report.in_scope;
    const int slack = cover.sum_v - (report.b + ell);
    if (slack < 0) {
      ++report.violations;
      report.violating.push_back(cover);
    }
    if (slack == 0) report.equality_attained = true;
    if (!report.min_slack || slack < *report.min_slack) {
      report.min_slack = slack;
      report.minimizing = cover;
    }
  }
  return report;
}

SampledDensity estimate_density(const Graph& g, const Graph& a, long long subset_size, std::uint64_t trials,
                                std::uint64_t seed, unsigned jobs) {
  if (subset_size < 0 || subset_size > g.order())
    throw Error(ErrorCode::InvalidArgument, "subset size must lie in 0..n");
  SampledDensity out;
  out.subset_size = subset_size;
  out.trials = trials;
  const auto hits = run_trials<std::uint8_t>(trials, jobs, [&](std::uint64_t i) -> std::uint8_t {
    Rng rng(derive_seed(seed, i));
    VertexMask mask(g.order(), 0);
    for (int v : random_subset(g.order(), subset_size, rng)) mask[v] = 1;
    return contains_copy(a, g, &mask) ? 1 : 0;
  });
  out.hits = static_cast<std::uint64_t>(std::count(hits.begin(), hits.end(), 1));
  out.fraction = trials ? static_cast<double>(out.hits) / static_cast<double>(trials) : 0.0;
  return out;
}

ConstructionReport construct_f_free_dense(int n, const Graph& a, const std::vector<Graph>& family, double eps,
                                          std::uint64_t seed, const ConstructionOptions& options) {
  ConstructionReport report;
  int k_edges = 0;
  for (const Graph& member : family) {
    if (is_a_degenerate(member, a).degenerate)
      throw Error(ErrorCode::NotApplicable, "a family member is A-degenerate");
    MemberReport m;
    m.member = member;
    m.core = extract_core(member, a);
    k_edges = std::max(k_edges, static_cast<int>(m.core.graph.size()));
    report.members.push_back(std::move(m));
  }
  report.params = make_params(n, a, eps, k_edges, seed, options.deletion_c, options.p_override);
  const CopyHypergraphSample sample = sample_copy_hypergraph(report.params, a);
  const Graph host = union_graph(sample);
  report.sampled_copies = sample.copies.size();
  report.union_edges = host.size();

  std::vector<std::uint8_t> deleted(n, 0);
  for (MemberReport& m : report.members) {
    const CopyEnumeration copies = enumerate_copies(m.core.graph, host, {}, options.copy_limit);
    m.core_copies = copies.copies.size();
    m.truncated = copies.truncated;
    report.truncated = report.truncated || copies.truncated;
    for (const Copy& c : copies.copies) {
      if (std::any_of(c.vertices.begin(), c.vertices.end(), [&](int v) { return deleted[v] != 0; })) continue;
      deleted[c.vertices.front()] = 1;
      ++m.deletions;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (deleted[v])
      report.deleted.push_back(v);
    else
      report.survivors.push_back(v);
  }
  report.deletion_budget = options.deletion_c * std::sqrt(static_cast<double>(n));
  report.within_budget = static_cast<double>(report.deleted.size()) <= report.deletion_budget;
  report.output = induced_subgraph(host, report.survivors).graph;

  report.family_free = true;
  for (MemberReport& m : report.members) {
    m.absent_after = !contains_copy(m.member, report.output);
    report.family_free = report.family_free && m.absent_after;
  }
  const long long subset = std::min<long long>(report.params.subset_size, report.output.order());
  report.density = estimate_density(report.output, a, subset, options.density_trials,
                                    derive_seed(seed, 0x64656e73ULL), options.jobs);
  return report;
}

CopyCountStats estimate_copy_count(const Graph& b_prime, const Graph& a, int n, double eps, std::uint64_t trials,
                                   std::uint64_t seed, unsigned jobs, std::optional<double> p_override,
                                   std::size_t copy_limit) {
  CopyCountStats stats;
  const int k = static_cast<int>(b_prime.size());
  stats.params = make_params(n, a, eps, k, derive_seed(seed, 0), 1.0, p_override);
  stats.sqrt_n = std::sqrt(static_cast<double>(n));

  struct TrialCount {
    std::size_t copies = 0;
    bool truncated = false;
  };
  const auto results = run_trials<TrialCount>(trials, jobs, [&](std::uint64_t i) {
    ConstructionParams params = stats.params;
    params.seed = derive_seed(seed, i);
    const Graph host = union_graph(sample_copy_hypergraph(params, a));
    const CopyEnumeration copies = enumerate_copies(b_prime, host, {}, copy_limit);
    return TrialCount{copies.copies.size(), copies.truncated};
  });
  std::size_t within = 0;
  double total = 0.0;
  for (const TrialCount& r : results) {
    stats.counts.push_back(r.copies);
    stats.truncated = stats.truncated || r.truncated;
    stats.max = std::max(stats.max, r.copies);
    total += static_cast<double>(r.copies);
    if (static_cast<double>(r.copies) <= stats.sqrt_n) ++within;
  }
  if (trials > 0) {
    stats.mean = total / static_cast<double>(trials);
    stats.fraction_within = static_cast<double>(within) / static_cast<double>(trials);
    stats.exceedance = 1.0 - stats.fraction_within;
  }
  if (k <= kMaxCoverEdges) {
    const CoverInequalityReport covers = verify_cover_inequality(b_prime, a);
    stats.min_cover_size = covers.min_multi_cover_size;
    if (stats.min_cover_size) stats.exponent_bound = *stats.min_cover_size * eps;
  }
  return stats;
}

}  // namespace vramsey
