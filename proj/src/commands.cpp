#include "vramsey/commands.hpp"

#include <cmath>

#include "vramsey/blocks.hpp"
#include "vramsey/colorer.hpp"
#include "vramsey/degeneracy.hpp"
#include "vramsey/error.hpp"
#include "vramsey/ramsey.hpp"
#include "vramsey/randcon.hpp"

namespace vramsey {

using nlohmann::json;

namespace {

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json graph_json(const Graph& g) {
  return {{"n", g.order()}, {"m", g.size()}, {"graph6", g.order() > 0 ? write_graph6(g) : ""}};
}

json block_json(const Block& b) { return {{"vertices", b.vertices}, {"edges", edges_json(b.edges)}}; }

json embedding_json(const Embedding& e) {
  return {{"map", e.map}, {"vertices", e.image_vertices}, {"edges", edges_json(e.image_edges)}};
}

json coloring_json(const VertexColoring& c) {
  return {{"colors", c.colors}, {"palette_size", c.palette_size}};
}

template <class T, class Fn>
json optional_json(const std::optional<T>& value, Fn&& fn) {
  return value ? fn(*value) : json(nullptr);
}

json forest_json(const ForestDecomposition& d) {
  json pieces = json::array();
  for (const ForestPiece& p : d.pieces)
    pieces.push_back({{"vertices", p.vertices},
                      {"edges", edges_json(p.edges)},
                      {"attachment", p.attachment ? json(*p.attachment) : json(nullptr)},
                      {"witness", p.witness}});
  return {{"size", d.size()},
          {"minimal", d.minimal},
          {"search_complete", d.search_complete},
          {"search_nodes", d.search_nodes},
          {"pieces", pieces}};
}

json params_json(const ConstructionParams& p) {
  return {{"n", p.n},
          {"a", p.a},
          {"eps", p.eps},
          {"k_edges", p.k_edges},
          {"p_raw", p.p_raw},
          {"p", p.p},
          {"p_clamped", p.p_clamped},
          {"delta0", p.delta0},
          {"delta", p.delta},
          {"subset_size", p.subset_size},
          {"deletion_c", p.deletion_c},
          {"seed", p.seed},
          {"aut", p.aut},
          {"total_copies", p.total_copies},
          {"eps_below_half_inverse_k", p.eps_below_half_inverse_k}};
}

json params_warnings(const ConstructionParams& p) {
  json w = json::array();
  if (p.p_clamped) w.push_back("copy probability exceeded 1 and was clamped; asymptotic guarantees do not apply");
  if (!p.eps_below_half_inverse_k)
    w.push_back("eps is not below 1/(2k) for k = |E(B')|; the copy-count bound is not guaranteed");
  return w;
}

json trace_cover_json(const TraceCover& c) {
  json traces = json::array();
  for (const Trace& t : c.traces) traces.push_back({{"vertices", t.vertices}, {"edges", edges_json(t.edges)}});
  return {{"traces", traces},
          {"size", c.size()},
          {"v_sizes", c.v_sizes},
          {"overlap_sizes", c.overlap_sizes},
          {"sum_v", c.sum_v}};
}

json density_json(const SampledDensity& d) {
  return {{"subset_size", d.subset_size}, {"trials", d.trials}, {"hits", d.hits}, {"fraction", d.fraction}};
}

const char* branch_name(CertificateBranch b) {
  switch (b) {
    case CertificateBranch::Embedding: return "embedding";
    case CertificateBranch::Coloring: return "coloring";
    case CertificateBranch::Unknown: break;
  }
  return "unknown";
}

json envelope(const char* command, bool unknown, json result) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"status", unknown ? "unknown" : "decided"},
          {"result", std::move(result)}};
}

}  // namespace

json run_blocks(const Graph& g) {
  const BlockDecomposition d = block_decomposition(g);
  json blocks = json::array();
  for (const Block& b : d.blocks) blocks.push_back(block_json(b));
  json tree = json::array();
  for (const auto& [block, cut] : d.tree_edges) tree.push_back({block, cut});
  return envelope("blocks", false,
                  {{"graph", graph_json(g)},
                   {"blocks", blocks},
                   {"cut_vertices", d.cut_vertices},
                   {"isolated_vertices", d.isolated_vertices},
                   {"tree", tree}});
}

json run_degenerate(const Graph& b, const Graph& a) {
  const DegeneracyCheck c = is_a_degenerate(b, a);
  return envelope("degenerate", false,
                  {{"graph", graph_json(b)},
                   {"pattern", graph_json(a)},
                   {"degenerate", c.degenerate},
                   {"witness", optional_json(c.witness, block_json)}});
}

json run_forest(const Graph& b, const Graph& a, const CommandOptions& o) {
  ForestOptions fo;
  if (o.budget) fo.node_budget = *o.budget;
  const DegeneracyCheck c = is_a_degenerate(b, a);
  const std::optional<ForestDecomposition> d = forest_decomposition(b, a, fo);
  return envelope("forest", d && !d->minimal,
                  {{"graph", graph_json(b)},
                   {"pattern", graph_json(a)},
                   {"degenerate", c.degenerate},
                   {"witness", optional_json(c.witness, block_json)},
                   {"decomposition", optional_json(d, forest_json)}});
}

json run_color(const Graph& g, const Graph& a, const Graph& b, const CommandOptions& o) {
  ColorerOptions co;
  co.copy_limit = o.copy_limit;
  if (o.budget) co.packing_budget = *o.budget;
  const RamseyCertificate cert = find_b_or_color(g, a, b, co);
  json levels = json::array();
  for (const LevelStats& s : cert.levels)
    levels.push_back({{"depth", s.depth},
                      {"kind", s.kind},
                      {"pieces", s.pieces},
                      {"target_vertices", s.target_vertices},
                      {"active_vertices", s.active_vertices},
                      {"u_size", s.u_size},
                      {"colors_used", s.colors_used},
                      {"role", s.role},
                      {"attachment", s.attachment},
                      {"max_out_degree", s.max_out_degree},
                      {"out_degree_bound", s.out_degree_bound},
                      {"family_size", s.family_size}});
  const bool unknown = cert.branch == CertificateBranch::Unknown;
  return envelope("color", unknown,
                  {{"graph", graph_json(g)},
                   {"pattern", graph_json(a)},
                   {"forest", graph_json(b)},
                   {"branch", branch_name(cert.branch)},
                   {"route", cert.route},
                   {"verified", cert.verified},
                   {"a", cert.a},
                   {"b", cert.b},
                   {"ell", cert.ell},
                   {"color_bound", cert.color_bound},
                   {"embedding", optional_json(cert.embedding, embedding_json)},
                   {"coloring", optional_json(cert.coloring, coloring_json)},
                   {"unknown_reason", unknown ? json(cert.unknown_reason) : json(nullptr)},
                   {"decomposition", forest_json(cert.decomposition)},
                   {"levels", levels}});
}

json run_ramsey(const Graph& g, const Graph& a, const CommandOptions& o) {
  RamseyOptions ro;
  ro.copy_limit = o.copy_limit;
  if (o.budget) ro.node_budget = *o.budget;
  const RamseyResult res = is_r_ramsey(g, a, o.r, ro);
  const bool unknown = res.verdict == Verdict::Unknown;
  return envelope("ramsey", unknown,
                  {{"graph", graph_json(g)},
                   {"pattern", graph_json(a)},
                   {"r", o.r},
                   {"ramsey", unknown ? json(nullptr) : json(res.verdict == Verdict::Yes)},
                   {"hyperedges", res.hyperedges},
                   {"nodes", res.nodes},
                   {"witness", optional_json(res.witness, coloring_json)},
                   {"unknown_reason", unknown ? json(res.unknown_reason) : json(nullptr)}});
}

json run_dense(const Graph& g, const Graph& a, const CommandOptions& o) {
  DensityOptions d;
  d.exact = o.exact;
  d.trials = o.trials;
  d.seed = o.seed;
  d.jobs = o.jobs;
  if (o.budget) d.subset_cap = *o.budget;
  const DensityResult res = is_eps_dense(g, a, o.eps, d);
  json result = {{"graph", graph_json(g)},
                 {"pattern", graph_json(a)},
                 {"eps", o.eps},
                 {"subset_size", res.subset_size},
                 {"mode", res.exact ? "exact" : "sampled"}};
  if (res.exact) {
    result["dense"] = res.dense;
    result["subsets_checked"] = res.subsets_checked;
    result["free_subset"] = res.free_subset ? json(*res.free_subset) : json(nullptr);
  } else {
    result["seed"] = o.seed;
    result["trials"] = res.trials;
    result["hits"] = res.hits;
    result["fraction"] = res.fraction;
  }
  return envelope("dense", false, std::move(result));
}

json run_construct(const Graph& a, const std::vector<Graph>& family, const CommandOptions& o) {
  ConstructionOptions co;
  co.deletion_c = o.deletion_c;
  co.p_override = o.p;
  co.copy_limit = o.copy_limit;
  co.density_trials = o.trials;
  co.jobs = o.jobs;
  const ConstructionReport rep = construct_f_free_dense(o.n, a, family, o.eps, o.seed, co);
  json members = json::array();
  for (const MemberReport& m : rep.members)
    members.push_back({{"member", graph_json(m.member)},
                       {"core", graph_json(m.core.graph)},
                       {"core_vertices", m.core.original},
                       {"core_copies", m.core_copies},
                       {"truncated", m.truncated},
                       {"deletions", m.deletions},
                       {"absent_after", m.absent_after}});
  json warnings = params_warnings(rep.params);
  if (!rep.within_budget) warnings.push_back("deletions exceeded the C*sqrt(n) budget");
  if (rep.truncated) warnings.push_back("core copy enumeration was truncated");
  return envelope("construct", rep.truncated,
                  {{"pattern", graph_json(a)},
                   {"params", params_json(rep.params)},
                   {"sampled_copies", rep.sampled_copies},
                   {"union_edges", rep.union_edges},
                   {"members", members},
                   {"deleted", rep.deleted},
                   {"deletion_budget", rep.deletion_budget},
                   {"within_budget", rep.within_budget},
                   {"output", graph_json(rep.output)},
                   {"survivors", rep.survivors},
                   {"family_free", rep.family_free},
                   {"truncated", rep.truncated},
                   {"density", density_json(rep.density)},
                   {"warnings", warnings}});
}

json run_covers(const Graph& b_prime, const Graph& a, const CommandOptions& o) {
  const std::vector<TraceCover> covers = enumerate_min_trace_covers(b_prime, a, o.max_ell);
  const CoverInequalityReport rep = verify_cover_inequality(b_prime, a);
  json listed = json::array();
  for (const TraceCover& c : covers) listed.push_back(trace_cover_json(c));
  json violating = json::array();
  for (const TraceCover& c : rep.violating) violating.push_back(trace_cover_json(c));
  return envelope("covers", false,
                  {{"graph", graph_json(b_prime)},
                   {"pattern", graph_json(a)},
                   {"max_ell", o.max_ell ? json(*o.max_ell) : json(nullptr)},
                   {"covers", listed},
                   {"inequality",
                    {{"b", rep.b},
                     {"covers", rep.covers},
                     {"single_trace_covers", rep.single_trace_covers},
                     {"in_scope", rep.in_scope},
                     {"violations", rep.violations},
                     {"min_slack", rep.min_slack ? json(*rep.min_slack) : json(nullptr)},
                     {"minimizing", optional_json(rep.minimizing, trace_cover_json)},
                     {"equality_attained", rep.equality_attained},
                     {"all_multi_covers_overlap_twice", rep.all_multi_covers_overlap_twice},
                     {"min_multi_cover_size",
                      rep.min_multi_cover_size ? json(*rep.min_multi_cover_size) : json(nullptr)},
                     {"violating", violating}}}});
}

json run_count(const Graph& b_prime, const Graph& a, const CommandOptions& o) {
  const CopyCountStats s =
      estimate_copy_count(b_prime, a, o.n, o.eps, o.trials, o.seed, o.jobs, o.p, o.copy_limit);
  return envelope("count", s.truncated,
                  {{"graph", graph_json(b_prime)},
                   {"pattern", graph_json(a)},
                   {"params", params_json(s.params)},
                   {"seed", o.seed},
                   {"trials", s.counts.size()},
                   {"counts", s.counts},
                   {"mean", s.mean},
                   {"max", s.max},
                   {"sqrt_n", s.sqrt_n},
                   {"fraction_within", s.fraction_within},
                   {"exceedance", s.exceedance},
                   {"truncated", s.truncated},
                   {"min_cover_size", s.min_cover_size ? json(*s.min_cover_size) : json(nullptr)},
                   {"exponent_bound", s.exponent_bound ? json(*s.exponent_bound) : json(nullptr)},
                   {"warnings", params_warnings(s.params)}});
}

json run_estimate_density(const Graph& g, const Graph& a, const CommandOptions& o) {
  long long size = 0;
  if (o.subset_size)
    size = *o.subset_size;
  else if (o.eps > 0.0)
    size = subset_size_for(o.eps, g.order());
  else
    throw Error(ErrorCode::InvalidArgument, "either a subset size or eps is required");
  json result = density_json(estimate_density(g, a, size, o.trials, o.seed, o.jobs));
  result["graph"] = graph_json(g);
  result["pattern"] = graph_json(a);
  result["seed"] = o.seed;
  return envelope("estimate-density", false, std::move(result));
}

std::string dump_report(const json& report) { return report.dump(2); }

bool report_is_unknown(const json& report) { return report.at("status") == "unknown"; }

}  // namespace vramsey
