// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vramsey.h"
#include "vramsey/blocks.hpp"
#include "vramsey/colorer.hpp"
#include "vramsey/degeneracy.hpp"
#include "vramsey/generators.hpp"
#include "vramsey/ramsey.hpp"
#include "vramsey/randcon.hpp"

using namespace vramsey;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (count_++ < 5) names_ += (names_.empty() ? "" : ", ") + what;
  }
  int count() const { return count_; }
  const std::string& names() const { return names_; }

 private:
  int count_ = 0;
  std::string names_;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t falling(int n, int k) {
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) out *= static_cast<std::uint64_t>(n - i);
  return out;
}

// Independent K4 test: some edge uv whose common neighbourhood holds an edge.
bool has_k4(const Graph& g) {
  for (const Edge& e : g.edges()) {
    std::vector<int> common;
    for (int w = 0; w < g.order(); ++w)
      if (g.adjacent(e.u, w) && g.adjacent(e.v, w)) common.push_back(w);
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j)
        if (g.adjacent(common[i], common[j])) return true;
  }
  return false;
}

// Copies of C4 as subgraphs: each is counted once per diagonal pair.
std::uint64_t count_c4(const Graph& g) {
  std::uint64_t twice = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      std::uint64_t c = 0;
      for (int w = 0; w < g.order(); ++w) c += g.adjacent(u, w) && g.adjacent(v, w);
      twice += c * (c - (c > 0)) / 2;
    }
  return twice / 2;
}

Outcome pigeonhole() {
  const auto t0 = std::chrono::steady_clock::now();
  Failures f;
  int cases = 0;
  for (int s = 2; s <= 3; ++s)
    for (int r = 1; r <= 3; ++r)
      for (int n = 1; n <= r * (s - 1) + 2; ++n) {
        ++cases;
        const RamseyResult res = is_r_ramsey(complete_graph(n), complete_graph(s), r);
        const bool expected = n >= r * (s - 1) + 1;
        f.check(res.verdict == (expected ? Verdict::Yes : Verdict::No), fmt("K%d K%d r=%d", n, s, r));
        if (res.verdict == Verdict::No)
          f.check(res.witness && verify_coloring(complete_graph(n), complete_graph(s), *res.witness).ok,
                  fmt("witness K%d K%d r=%d", n, s, r));
      }
  const double secs = seconds_since(t0);
  f.check(secs < 10.0, "over 10 s");
  return {f.count() == 0, fmt("%d/%d cases, %.2f s%s%s", cases - f.count(), cases, secs, f.count() ? "; failed: " : "",
                              f.names().c_str())};
}

Outcome dichotomy() {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph k2 = complete_graph(2);
  const Graph k3 = complete_graph(3);
  const std::vector<std::pair<Graph, Graph>> pairs = {
      {k3, bowtie_graph()}, {k2, path_graph(3)}, {k3, disjoint_union(k3, k3)}};

  std::vector<Graph> hosts;
  for (const Graph& g : oracle::catalogue(8))
    if (oracle::connected(g)) hosts.push_back(g);
  const std::size_t exhaustive = hosts.size();
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const int n = 8 + static_cast<int>(i % 5);
    hosts.push_back(oracle::random_connected_graph(n, 0.2 + 0.05 * static_cast<double>(i % 9), derive_seed(77, i)));
  }

  Failures f;
  std::size_t runs = 0, embeddings = 0, colorings = 0;
  for (const auto& [a, b] : pairs) {
    const int ell = *oracle::min_forest_size(b, a);
    const long long r = static_cast<long long>(ell) * (2LL * (a.order() - 1) * (b.order() - 2) + 1);
    for (const Graph& g : hosts) {
      ++runs;
      const RamseyCertificate cert = find_b_or_color(g, a, b);
      const bool has_b = oracle::has_copy(b, g);
      const std::string tag = oracle::graph6(g) + " B=" + oracle::graph6(b);
      f.check(cert.color_bound == r, "bound " + tag);
      f.check((cert.branch == CertificateBranch::Embedding) == has_b, "branch " + tag);
      if (cert.branch == CertificateBranch::Embedding) {
        ++embeddings;
        bool ok = cert.embedding && static_cast<int>(cert.embedding->map.size()) == b.order();
        if (ok) {
          const auto& m = cert.embedding->map;
          ok = std::set<int>(m.begin(), m.end()).size() == m.size();
          for (const Edge& e : b.edges()) ok = ok && g.adjacent(m[e.u], m[e.v]);
        }
        f.check(ok, "embedding " + tag);
      } else if (cert.branch == CertificateBranch::Coloring) {
        ++colorings;
        const bool ok = cert.coloring && verify_coloring(g, a, *cert.coloring).ok;
        std::set<int> used;
        if (cert.coloring) used.insert(cert.coloring->colors.begin(), cert.coloring->colors.end());
        f.check(ok && static_cast<long long>(used.size()) <= r, "coloring " + tag);
      } else {
        f.check(false, "unknown " + tag);
      }
    }
  }
  const double secs = seconds_since(t0);
  f.check(secs < 300.0, "over 5 min");
  return {f.count() == 0,
          fmt("%zu runs (%zu connected graphs n<=8 + 2000 random n in 8..12), %zu embeddings, %zu colorings, "
              "%d failures, %.1f s%s%s",
              runs, exhaustive, embeddings, colorings, f.count(), secs, f.count() ? "; failed: " : "",
              f.names().c_str())};
}

Outcome ramsey_hosts_contain_b() {
  const Graph k2 = complete_graph(2);
  const Graph p3 = path_graph(3);
  std::vector<Graph> corpus = {complete_graph(7), complete_graph(8)};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    // K7 with a random pendant tree hanging off vertex seed % 7.
    Rng rng(seed);
    std::vector<Edge> edges = complete_graph(7).edges();
    const int extra = 1 + static_cast<int>(rng() % 6);
    edges.emplace_back(static_cast<int>(seed % 7), 7);
    for (int v = 8; v < 7 + extra; ++v) edges.emplace_back(7 + static_cast<int>(rng() % (v - 7)), v);
    corpus.emplace_back(7 + extra, edges);
  }
  // Non-Ramsey controls: the implication is vacuous there.
  corpus.push_back(complete_graph(6));
  corpus.push_back(cycle_graph(9));

  Failures f;
  int ramsey_hosts = 0;
  for (const Graph& g : corpus) {
    const RamseyResult rr = is_r_ramsey(g, k2, 6);
    f.check(rr.verdict != Verdict::Unknown, "unknown " + oracle::graph6(g));
    if (rr.verdict != Verdict::Yes) continue;
    ++ramsey_hosts;
    const RamseyCertificate cert = find_b_or_color(g, k2, p3);
    f.check(cert.color_bound == 6, "bound");
    f.check(cert.branch == CertificateBranch::Embedding && cert.verified, "branch " + oracle::graph6(g));
  }
  f.check(ramsey_hosts == static_cast<int>(corpus.size()) - 2, "corpus Ramsey count");
  return {f.count() == 0, fmt("%d 6-Ramsey hosts of %zu, %d failures%s%s", ramsey_hosts, corpus.size(), f.count(),
                              f.count() ? "; failed: " : "", f.names().c_str())};
}

Outcome structural() {
  const auto graphs = oracle::catalogue(7);
  Failures f;
  for (const Graph& g : graphs) {
    const std::string tag = oracle::graph6(g);
    f.check(articulation_points(g) == oracle::articulation_points(g), "cuts " + tag);
    std::vector<std::vector<Edge>> blocks;
    for (const Block& b : block_decomposition(g).blocks) blocks.push_back(b.edges);
    std::sort(blocks.begin(), blocks.end());
    f.check(blocks == oracle::blocks(g), "blocks " + tag);
  }
  std::size_t degenerate = 0;
  const std::vector<Graph> patterns = {complete_graph(3), path_graph(4), cycle_graph(4)};
  for (const Graph& a : patterns)
    for (const Graph& b : graphs) {
      const std::string tag = oracle::graph6(b) + " A=" + oracle::graph6(a);
      const bool expected = oracle::a_degenerate(b, a);
      f.check(is_a_degenerate(b, a).degenerate == expected, "degenerate " + tag);
      const auto d = forest_decomposition(b, a);
      f.check(d.has_value() == expected, "forest existence " + tag);
      if (!d || !expected) continue;
      ++degenerate;
      f.check(d->minimal && verify_forest(b, a, *d), "forest validity " + tag);
      f.check(static_cast<int>(d->size()) == *oracle::min_forest_size(b, a), "forest size " + tag);
    }
  return {f.count() == 0, fmt("%zu graphs n<=7; %zu degenerate (B,A) pairs; %d failures%s%s", graphs.size(),
                              degenerate, f.count(), f.count() ? "; failed: " : "", f.names().c_str())};
}

Outcome cover_inequality() {
  const Graph k3 = complete_graph(3);
  const std::vector<std::pair<std::string, std::pair<Graph, Graph>>> pairs = {
      {"C4/K3", {cycle_graph(4), k3}},      {"K4/K3", {complete_graph(4), k3}},
      {"diamond/K3", {diamond_graph(), k3}}, {"C5/K3", {cycle_graph(5), k3}},
      {"C4/P3", {cycle_graph(4), path_graph(3)}}};
  Failures f;
  std::string summary;
  for (const auto& [name, pair] : pairs) {
    const auto& [b, a] = pair;
    const CoverInequalityReport rep = verify_cover_inequality(b, a);
    const auto brute = oracle::min_trace_covers(b, a);
    std::size_t in_scope = 0, violations = 0;
    bool equality = false;
    for (const auto& c : brute) {
      const int ell = static_cast<int>(c.traces.size());
      if (ell < 2 || std::any_of(c.overlap_sizes.begin(), c.overlap_sizes.end(), [](int s) { return s < 2; }))
        continue;
      ++in_scope;
      if (c.sum_v < b.order() + ell) ++violations;
      if (c.sum_v == b.order() + ell) equality = true;
    }
    f.check(rep.covers == brute.size(), name + " cover count");
    f.check(rep.in_scope == in_scope, name + " in-scope count");
    f.check(rep.violations == 0 && violations == 0, name + " violation");
    if (name == "C4/K3") f.check(rep.equality_attained && equality && rep.min_slack == 0, "C4/K3 equality case");
    summary += fmt("%s %zu covers/%zu in scope/slack %d; ", name.c_str(), rep.covers, rep.in_scope,
                   rep.min_slack.value_or(-1));
  }
  summary += fmt("%d failures%s%s", f.count(), f.count() ? "; failed: " : "", f.names().c_str());
  return {f.count() == 0, summary};
}

Outcome construction() {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph k3 = complete_graph(3);
  const Graph k4 = complete_graph(4);
  int free = 0, within = 0, dense = 0, runs = 0;
  Failures f;
  std::string detail;
  for (int n : {100, 200}) {
    const double delta0 = 0.3 / (2.0 * 2);
    const auto expected_n = static_cast<long long>(std::floor(std::pow(n, 1.0 - delta0) + 1e-9));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      ++runs;
      const ConstructionReport rep = construct_f_free_dense(n, k3, {k4}, 0.3, seed);
      f.check(!rep.truncated, fmt("truncated n=%d seed=%llu", n, static_cast<unsigned long long>(seed)));
      f.check(rep.density.subset_size == expected_n, fmt("subset size n=%d", n));
      f.check(rep.density.trials == 1000, "density trials");
      free += !has_k4(rep.output) && rep.family_free;
      within += static_cast<double>(rep.deleted.size()) <= std::sqrt(static_cast<double>(n));
      dense += rep.density.fraction >= 0.99;
      detail += fmt("[n=%d s=%llu del=%zu dens=%.3f] ", n, static_cast<unsigned long long>(seed), rep.deleted.size(),
                    rep.density.fraction);
    }
  }
  const double secs = seconds_since(t0);
  f.check(free == runs, "not K4-free");
  f.check(within >= 8, "deletion budget");
  f.check(dense >= 8, "density");
  f.check(secs < 120.0, "over 2 min");
  return {f.count() == 0, fmt("K4-free %d/%d, deletions<=sqrt(n) %d/%d, density>=0.99 %d/%d, %.1f s (engineering "
                              "tolerances for asymptotic whp claims) %s",
                              free, runs, within, runs, dense, runs, secs, detail.c_str())};
}

Outcome copy_count_trend() {
  const Graph k3 = complete_graph(3);
  const Graph c4 = cycle_graph(4);
  const std::uint64_t seed = 2024;
  Failures f;
  double means[2] = {0, 0};
  double within[2] = {0, 0};
  const int sizes[2] = {60, 120};
  for (int i = 0; i < 2; ++i) {
    const CopyCountStats s = estimate_copy_count(c4, k3, sizes[i], 0.3, 100, seed, 4);
    f.check(!s.truncated && s.counts.size() == 100, "truncated");
    means[i] = s.mean;
    within[i] = s.fraction_within;
    // Recount trial 0 independently.
    ConstructionParams p = make_params(sizes[i], k3, 0.3, 4, derive_seed(seed, 0));
    const Graph host = union_graph(sample_copy_hypergraph(p, k3));
    f.check(count_c4(host) == s.counts[0], fmt("recount n=%d", sizes[i]));
    f.check(s.fraction_within >= 0.9, fmt("fraction n=%d", sizes[i]));
  }
  const double ratio = means[0] > 0 ? means[1] / means[0] : 0.0;
  f.check(ratio <= 2.0, "growth ratio");
  // Context only: the same run with eps below 1/(2|E(C4)|) = 1/8.
  const CopyCountStats low60 = estimate_copy_count(c4, k3, 60, 0.1, 100, seed, 4);
  const CopyCountStats low120 = estimate_copy_count(c4, k3, 120, 0.1, 100, seed, 4);
  return {f.count() == 0,
          fmt("n=60 mean %.3f within %.2f; n=120 mean %.3f within %.2f; ratio %.3f (growth exponent %.2f, bound 0.6); "
              "context eps=0.1: within %.2f / %.2f%s%s",
              means[0], within[0], means[1], within[1], ratio, ratio > 0 ? std::log2(ratio) : 0.0,
              low60.fraction_within, low120.fraction_within,
              f.count() ? "; failed: " : "", f.names().c_str())};
}

Outcome sampling() {
  const Graph k3 = complete_graph(3);
  const int n = 100;
  const double eps = 0.3;
  const double t = static_cast<double>(falling(n, 3) / oracle::automorphisms(k3));
  const double p = std::pow(n, 1.0 - 3 + eps);
  const double mean = t * p;
  const double sd = std::sqrt(t * p * (1 - p));
  Failures f;
  double total = 0, worst = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = sample_copy_hypergraph(make_params(n, k3, eps, 6, seed), k3);
    const double z = std::abs(static_cast<double>(s.copies.size()) - mean) / sd;
    worst = std::max(worst, z);
    total += static_cast<double>(s.copies.size());
    f.check(z <= 5.0, fmt("seed %llu", static_cast<unsigned long long>(seed)));
    f.check(std::set<Copy>(s.copies.begin(), s.copies.end()).size() == s.copies.size(), "duplicate copy");
  }
  const double mean_z = std::abs(total / 20 - mean) / (sd / std::sqrt(20.0));
  f.check(mean_z <= 5.0, "mean over seeds");
  const auto none = sample_copy_hypergraph(make_params(n, k3, eps, 6, 3, 1.0, 0.0), k3);
  f.check(none.copies.empty(), "p=0");
  const auto all = sample_copy_hypergraph(make_params(30, k3, eps, 6, 3, 1.0, 1.0), k3);
  f.check(all.copies.size() == oracle::copies(k3, complete_graph(30)).size(), "p=1");
  return {f.count() == 0, fmt("T=%.0f p=%.3g mean %.2f sd %.2f; worst |z| %.2f over 20 seeds, mean |z| %.2f; endpoints "
                              "p=0 -> %zu, p=1 -> %zu%s%s",
                              t, p, mean, sd, worst, mean_z, none.copies.size(), all.copies.size(),
                              f.count() ? "; failed: " : "", f.names().c_str())};
}

// Every randomized run above, through the C API, twice with the same seed
// (and with different thread counts).
Outcome determinism() {
  struct Handle {
    vr_graph* g = nullptr;
    explicit Handle(const char* text) { vr_graph_from_text(text, &g); }
    ~Handle() { vr_graph_free(g); }
  };
  const Handle k3("Bw"), k4("C~"), c4("Cr"), k20(write_graph6(complete_graph(20)).c_str());
  Failures f;
  int compared = 0;
  auto twice = [&](const std::string& what, const std::function<vr_status(const vr_options&, char**)>& call,
                   vr_options o) {
    std::string out[2];
    for (int i = 0; i < 2; ++i) {
      o.jobs = i == 0 ? 1 : 4;
      char* s = nullptr;
      const vr_status st = call(o, &s);
      f.check(st == VR_OK || st == VR_UNKNOWN, what + ": " + vr_last_error());
      out[i] = s ? s : "";
      vr_string_free(s);
    }
    ++compared;
    f.check(!out[0].empty() && out[0] == out[1], what + " differs");
  };
  vr_options base;
  vr_options_init(&base);
  base.eps = 0.3;
  const vr_graph* family[] = {k4.g};
  for (int n : {100, 200})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      vr_options o = base;
      o.n = n;
      o.seed = seed;
      twice(fmt("construct n=%d seed=%llu", n, static_cast<unsigned long long>(seed)),
            [&](const vr_options& x, char** s) { return vr_construct_json(k3.g, family, 1, &x, s); }, o);
    }
  for (int n : {60, 120}) {
    vr_options o = base;
    o.n = n;
    o.trials = 100;
    o.seed = 2024;
    twice(fmt("count n=%d", n), [&](const vr_options& x, char** s) { return vr_count_json(c4.g, k3.g, &x, s); }, o);
  }
  {
    vr_options o = base;
    o.subset_size = 3;
    o.seed = 9;
    twice("estimate-density",
          [&](const vr_options& x, char** s) { return vr_estimate_density_json(k20.g, k3.g, &x, s); }, o);
    o.exact = 0;
    o.eps = 0.15;
    o.trials = 200;
    twice("dense sampled", [&](const vr_options& x, char** s) { return vr_dense_json(k20.g, k3.g, &x, s); }, o);
  }
  return {f.count() == 0, fmt("%d randomized reports byte-identical across reruns and thread counts%s%s", compared,
                              f.count() ? "; failed: " : "", f.names().c_str())};
}

}  // namespace

int main(int argc, char** argv) {
  // --expect-fail k marks criterion k as a known, analysed failure: its line
  // still reads FAIL, but it does not change the exit status.
  std::set<std::size_t> expected_failures;
  for (int i = 1; i + 1 < argc; i += 2)
    if (std::string(argv[i]) == "--expect-fail") expected_failures.insert(std::stoul(argv[i + 1]));
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"pigeonhole law", pigeonhole},
      {"certifying dichotomy soundness", dichotomy},
      {"desk-scale Ramsey hosts contain B", ramsey_hosts_contain_b},
      {"structural oracles", structural},
      {"cover inequality", cover_inequality},
      {"construction end-to-end", construction},
      {"copy-count trend", copy_count_trend},
      {"sampling correctness", sampling},
      {"determinism", determinism},
  };
  int failed = 0;
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const bool expected = expected_failures.contains(i + 1);
    failed += !o.pass;
    unexpected += !o.pass && !expected;
    std::printf("AC%zu %s  %s: %s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str(),
                !o.pass && expected ? " [expected failure]" : "");
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return unexpected == 0 ? 0 : 1;
}
