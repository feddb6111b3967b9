#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vramsey.h"

namespace {

struct GraphDeleter {
  void operator()(vr_graph* g) const { vr_graph_free(g); }
};
using GraphPtr = std::unique_ptr<vr_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { vr_string_free(s); }
};

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphPtr parse_text(const std::string& text, const std::string& what) {
  vr_graph* g = nullptr;
  const vr_status s = vr_graph_from_text(text.c_str(), &g);
  if (s != VR_OK) throw CliError(what + ": " + vr_status_name(s) + ": " + vr_last_error());
  return GraphPtr(g);
}

// "<g6>" inline or "@path" to a file holding an edge list or graph6.
GraphPtr load_graph(const std::string& arg, const std::string& what) {
  if (!arg.empty() && arg.front() == '@') return parse_text(read_file(arg.substr(1)), what);
  return parse_text(arg, what);
}

bool looks_like_edge_list(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return false;
  const char c = text[first];
  return (c >= '0' && c <= '9') || c == '#' || text.compare(first, 2, "n=") == 0;
}

// A family file holds one graph6 string per line, or a single edge list.
std::vector<GraphPtr> load_family(const std::vector<std::string>& args) {
  std::vector<GraphPtr> out;
  for (const std::string& arg : args) {
    if (arg.empty() || arg.front() != '@') {
      out.push_back(load_graph(arg, "--family"));
      continue;
    }
    const std::string text = read_file(arg.substr(1));
    if (looks_like_edge_list(text)) {
      out.push_back(parse_text(text, "--family"));
      continue;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) out.push_back(parse_text(line, "--family"));
    }
  }
  return out;
}

void render_value(std::ostream& os, const nlohmann::json& v) {
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_primitive(); })) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].dump();
    return;
  }
  if (v.is_object() && v.contains("graph6") && v.contains("n")) {
    os << v["graph6"].get<std::string>() << " (n=" << v["n"] << ", m=" << v["m"] << ")";
    return;
  }
  os << (v.is_string() ? v.get<std::string>() : v.dump());
}

// Lossy one-line-per-field rendering of a report.
std::string render_text(const nlohmann::json& report) {
  std::ostringstream os;
  os << report["command"].get<std::string>() << ": " << report["status"].get<std::string>() << "\n";
  for (const auto& [key, value] : report["result"].items()) {
    os << key << ": ";
    render_value(os, value);
    os << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex Ramsey toolkit: blocks, A-forests, certified colorings, random constructions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string graph_arg, pattern_arg, forest_arg, file_arg, format = "json", out_path;
  std::vector<std::string> family_args;
  vr_options opts;
  vr_options_init(&opts);
  double p_value = 0.0;
  bool sampled = false;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "Write the report to this path instead of stdout");

  auto add_graph = [&](CLI::App* sub, bool required) {
    auto* g = sub->add_option("--graph", graph_arg, "Host graph: graph6 string or @file");
    auto* f = sub->add_option("--file", file_arg, "Host graph file (edge list or graph6)");
    g->excludes(f);
    if (required) sub->callback([sub] {
      if (sub->count("--graph") + sub->count("--file") == 0)
        throw CLI::RequiredError("--graph or --file");
    });
  };
  auto add_pattern = [&](CLI::App* sub) {
    sub->add_option("--pattern", pattern_arg, "Pattern A: graph6 string or @file")->required();
  };
  auto add_seeded = [&](CLI::App* sub) {
    sub->add_option("--seed", opts.seed, "Master seed")->capture_default_str();
    sub->add_option("--trials", opts.trials, "Monte Carlo trials")->capture_default_str();
    sub->add_option("--jobs", opts.jobs, "Concurrent trials")->check(CLI::PositiveNumber);
  };
  auto add_copy_limit = [&](CLI::App* sub) {
    sub->add_option("--copy-limit", opts.copy_limit, "Copy enumeration limit")->capture_default_str();
  };

  auto* blocks = app.add_subcommand("blocks", "Articulation points and block decomposition");
  add_graph(blocks, true);

  auto* degenerate = app.add_subcommand("degenerate", "Decide whether the graph is A-degenerate");
  add_graph(degenerate, true);
  add_pattern(degenerate);

  auto* forest = app.add_subcommand("forest", "Minimum A-forest decomposition");
  add_graph(forest, true);
  add_pattern(forest);
  forest->add_option("--budget", opts.budget, "Search node budget");

  auto* color = app.add_subcommand("color", "Embedding of B or a coloring with no monochromatic A");
  add_graph(color, true);
  add_pattern(color);
  color->add_option("--forest", forest_arg, "The A-degenerate graph B: graph6 string or @file")->required();
  color->add_option("--budget", opts.budget, "Set packing node budget");
  add_copy_limit(color);

  auto* ramsey = app.add_subcommand("ramsey", "Decide whether the graph is vertex r-Ramsey for A");
  add_graph(ramsey, true);
  add_pattern(ramsey);
  ramsey->add_option("-r", opts.r, "Number of colors")->required()->check(CLI::PositiveNumber);
  ramsey->add_option("--budget", opts.budget, "Coloring search node budget");
  add_copy_limit(ramsey);

  auto* dense = app.add_subcommand("dense", "Decide or estimate eps-density");
  add_graph(dense, true);
  add_pattern(dense);
  dense->add_option("--eps", opts.eps, "Subset fraction in (0, 1]")->required();
  dense->add_flag("--sampled", sampled, "Estimate by sampling instead of exhaustive search");
  dense->add_option("--budget", opts.budget, "Cap on the number of subsets in exact mode");
  add_seeded(dense);

  auto* construct = app.add_subcommand("construct", "Random F-free eps-dense construction");
  add_pattern(construct);
  construct->add_option("--family", family_args, "Family member (repeatable): graph6 string or @file")
      ->required();
  construct->add_option("-n", opts.n, "Vertex count")->required();
  construct->add_option("--eps", opts.eps, "eps")->required();
  construct->add_option("--p", p_value, "Override the copy probability");
  construct->add_option("--deletion-c", opts.deletion_c, "Deletion budget multiplier C in C*sqrt(n)");
  add_seeded(construct);
  add_copy_limit(construct);

  auto* covers = app.add_subcommand("covers", "Inclusion-minimal trace covers and the cover inequality");
  add_graph(covers, true);
  add_pattern(covers);
  covers->add_option("--max-ell", opts.max_ell, "Largest cover size listed")->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "Monte Carlo copy counts of B' in the random union graph");
  add_graph(count, true);
  add_pattern(count);
  count->add_option("-n", opts.n, "Vertex count")->required();
  count->add_option("--eps", opts.eps, "eps")->required();
  count->add_option("--p", p_value, "Override the copy probability");
  add_seeded(count);
  add_copy_limit(count);

  auto* estimate = app.add_subcommand("estimate-density", "Fraction of sampled subsets containing A");
  add_graph(estimate, true);
  add_pattern(estimate);
  estimate->add_option("--subset-size", opts.subset_size, "Subset size N");
  estimate->add_option("--eps", opts.eps, "Derive N as floor(eps * n)");
  add_seeded(estimate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (const CLI::Option* p_opt = sub->get_option_no_throw("--p"); p_opt && p_opt->count() > 0) {
      opts.p = p_value;
      opts.has_p = 1;
    }
    opts.exact = sampled ? 0 : 1;

    GraphPtr graph, pattern, forest_graph;
    if (!graph_arg.empty()) graph = load_graph(graph_arg, "--graph");
    if (!file_arg.empty()) graph = parse_text(read_file(file_arg), "--file");
    if (!pattern_arg.empty()) pattern = load_graph(pattern_arg, "--pattern");
    if (!forest_arg.empty()) forest_graph = load_graph(forest_arg, "--forest");

    char* raw = nullptr;
    vr_status status = VR_ERR_INTERNAL;
    const std::string name = sub->get_name();
    if (name == "blocks") {
      status = vr_blocks_json(graph.get(), &raw);
    } else if (name == "degenerate") {
      status = vr_degenerate_json(graph.get(), pattern.get(), &raw);
    } else if (name == "forest") {
      status = vr_forest_json(graph.get(), pattern.get(), &opts, &raw);
    } else if (name == "color") {
      status = vr_color_json(graph.get(), pattern.get(), forest_graph.get(), &opts, &raw);
    } else if (name == "ramsey") {
      status = vr_ramsey_json(graph.get(), pattern.get(), &opts, &raw);
    } else if (name == "dense") {
      status = vr_dense_json(graph.get(), pattern.get(), &opts, &raw);
    } else if (name == "construct") {
      const std::vector<GraphPtr> family = load_family(family_args);
      std::vector<const vr_graph*> members;
      for (const GraphPtr& g : family) members.push_back(g.get());
      status = vr_construct_json(pattern.get(), members.data(), members.size(), &opts, &raw);
    } else if (name == "covers") {
      status = vr_covers_json(graph.get(), pattern.get(), &opts, &raw);
    } else if (name == "count") {
      status = vr_count_json(graph.get(), pattern.get(), &opts, &raw);
    } else if (name == "estimate-density") {
      status = vr_estimate_density_json(graph.get(), pattern.get(), &opts, &raw);
    }
    std::unique_ptr<char, StringDeleter> doc(raw);
    if (status != VR_OK && status != VR_UNKNOWN)
      throw CliError(std::string(vr_status_name(status)) + ": " + vr_last_error());

    std::string text = doc.get();
    text = format == "text" ? render_text(nlohmann::json::parse(text)) : text + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw CliError("cannot write " + out_path);
      out << text;
    }
    return status == VR_UNKNOWN ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
