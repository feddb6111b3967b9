#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vramsey/embed.hpp"
#include "vramsey/graph.hpp"

namespace vramsey {

inline constexpr const char* kSchemaVersion = "1.0";

// Parameters shared by the command runners. Fields a command does not use are
// ignored.
struct CommandOptions {
  int r = 0;
  double eps = 0.0;
  int n = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;  // search-node cap of the command's main search
  unsigned jobs = 1;
  std::size_t copy_limit = kDefaultCopyLimit;
  std::optional<int> max_ell;
  std::optional<double> p;
  double deletion_c = 1.0;
  std::optional<long long> subset_size;
  bool exact = true;
};

// Each runner returns the envelope
//   {"schema_version", "command", "status": "decided"|"unknown", "result"}.
// Errors propagate as vramsey::Error.
nlohmann::json run_blocks(const Graph& g);
nlohmann::json run_degenerate(const Graph& b, const Graph& a);
nlohmann::json run_forest(const Graph& b, const Graph& a, const CommandOptions& o);
nlohmann::json run_color(const Graph& g, const Graph& a, const Graph& b, const CommandOptions& o);
nlohmann::json run_ramsey(const Graph& g, const Graph& a, const CommandOptions& o);
nlohmann::json run_dense(const Graph& g, const Graph& a, const CommandOptions& o);
nlohmann::json run_construct(const Graph& a, const std::vector<Graph>& family, const CommandOptions& o);
nlohmann::json run_covers(const Graph& b_prime, const Graph& a, const CommandOptions& o);
nlohmann::json run_count(const Graph& b_prime, const Graph& a, const CommandOptions& o);
nlohmann::json run_estimate_density(const Graph& g, const Graph& a, const CommandOptions& o);

// Canonical serialization: sorted keys, two-space indent, no trailing newline.
std::string dump_report(const nlohmann::json& report);

bool report_is_unknown(const nlohmann::json& report);

}  // namespace vramsey
