#include "vramsey.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "vramsey/commands.hpp"
#include "vramsey/error.hpp"
#include "vramsey/graph.hpp"

struct vr_graph {
  vramsey::Graph graph;
};

namespace {

thread_local std::string last_error;

vr_status status_of(vramsey::ErrorCode code) {
  using vramsey::ErrorCode;
  switch (code) {
    case ErrorCode::MalformedInput: return VR_ERR_MALFORMED_INPUT;
    case ErrorCode::InvalidVertex: return VR_ERR_INVALID_VERTEX;
    case ErrorCode::InvalidArgument: return VR_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotDegenerate: return VR_ERR_NOT_DEGENERATE;
    case ErrorCode::IsDegenerate: return VR_ERR_IS_DEGENERATE;
    case ErrorCode::NotApplicable: return VR_ERR_NOT_APPLICABLE;
    case ErrorCode::UnsupportedPattern: return VR_ERR_UNSUPPORTED_PATTERN;
    case ErrorCode::SubsetSpaceTooLarge: return VR_ERR_SUBSET_SPACE_TOO_LARGE;
    case ErrorCode::TooLarge: return VR_ERR_TOO_LARGE;
    case ErrorCode::ParamOutOfRange: return VR_ERR_PARAM_OUT_OF_RANGE;
    case ErrorCode::Internal: break;
  }
  return VR_ERR_INTERNAL;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into status codes and the thread's last error.
template <class Fn>
vr_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const vramsey::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown exception";
  }
  return VR_ERR_INTERNAL;
}

vr_status require(bool ok, const char* what) {
  if (ok) return VR_OK;
  last_error = what;
  return VR_ERR_INVALID_ARGUMENT;
}

vramsey::CommandOptions to_options(const vr_options* o) {
  vr_options defaults;
  vr_options_init(&defaults);
  if (!o) o = &defaults;
  vramsey::CommandOptions c;
  c.r = o->r;
  c.eps = o->eps;
  c.n = o->n;
  c.trials = o->trials;
  c.seed = o->seed;
  if (o->budget) c.budget = o->budget;
  c.jobs = o->jobs ? o->jobs : 1;
  c.copy_limit = o->copy_limit;
  if (o->max_ell > 0) c.max_ell = o->max_ell;
  if (o->has_p) c.p = o->p;
  c.deletion_c = o->deletion_c;
  if (o->subset_size >= 0) c.subset_size = o->subset_size;
  c.exact = o->exact != 0;
  return c;
}

template <class Fn>
vr_status write_report(char** out, Fn&& fn) {
  if (!out) return require(false, "output pointer is null");
  *out = nullptr;
  return guarded([&] {
    const nlohmann::json report = fn();
    *out = copy_string(vramsey::dump_report(report));
    return vramsey::report_is_unknown(report) ? VR_UNKNOWN : VR_OK;
  });
}

template <class Parse>
vr_status make_graph(const char* text, vr_graph** out, Parse&& parse) {
  if (!text || !out) return require(false, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new vr_graph{parse(text)};
    return VR_OK;
  });
}

}  // namespace

extern "C" {

void vr_options_init(vr_options* o) {
  if (!o) return;
  *o = vr_options{};
  o->trials = 1000;
  o->jobs = 1;
  o->copy_limit = vramsey::kDefaultCopyLimit;
  o->deletion_c = 1.0;
  o->subset_size = -1;
  o->exact = 1;
}

vr_status vr_graph_from_graph6(const char* text, vr_graph** out) {
  return make_graph(text, out, [](const char* t) { return vramsey::parse_graph6(t); });
}

vr_status vr_graph_from_edge_list(const char* text, vr_graph** out) {
  return make_graph(text, out, [](const char* t) { return vramsey::parse_edge_list(t); });
}

vr_status vr_graph_from_text(const char* text, vr_graph** out) {
  return make_graph(text, out, [](const char* t) { return vramsey::parse_graph_text(t); });
}

void vr_graph_free(vr_graph* g) { delete g; }

int vr_graph_order(const vr_graph* g) { return g ? g->graph.order() : 0; }

size_t vr_graph_size(const vr_graph* g) { return g ? g->graph.size() : 0; }

vr_status vr_graph_to_graph6(const vr_graph* g, char** out) {
  if (!g || !out) return require(false, "null argument");
  *out = nullptr;
  return guarded([&] {
    if (g->graph.order() == 0) throw vramsey::Error(vramsey::ErrorCode::InvalidArgument, "graph6 needs n >= 1");
    *out = copy_string(vramsey::write_graph6(g->graph));
    return VR_OK;
  });
}

void vr_string_free(char* s) { std::free(s); }

const char* vr_last_error(void) { return last_error.c_str(); }

const char* vr_status_name(vr_status status) {
  switch (status) {
    case VR_OK: return "ok";
    case VR_UNKNOWN: return "unknown";
    case VR_ERR_MALFORMED_INPUT: return "MalformedInput";
    case VR_ERR_INVALID_VERTEX: return "InvalidVertex";
    case VR_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case VR_ERR_NOT_DEGENERATE: return "NotDegenerate";
    case VR_ERR_IS_DEGENERATE: return "IsDegenerate";
    case VR_ERR_NOT_APPLICABLE: return "NotApplicable";
    case VR_ERR_UNSUPPORTED_PATTERN: return "UnsupportedPattern";
    case VR_ERR_SUBSET_SPACE_TOO_LARGE: return "SubsetSpaceTooLarge";
    case VR_ERR_TOO_LARGE: return "TooLarge";
    case VR_ERR_PARAM_OUT_OF_RANGE: return "ParamOutOfRange";
    case VR_ERR_INTERNAL: return "Internal";
  }
  return "invalid-status";
}

vr_status vr_blocks_json(const vr_graph* g, char** out) {
  if (!g) return require(false, "null graph");
  return write_report(out, [&] { return vramsey::run_blocks(g->graph); });
}

vr_status vr_degenerate_json(const vr_graph* b, const vr_graph* a, char** out) {
  if (!b || !a) return require(false, "null graph");
  return write_report(out, [&] { return vramsey::run_degenerate(b->graph, a->graph); });
}

vr_status vr_forest_json(const vr_graph* b, const vr_graph* a, const vr_options* o, char** out) {
  if (!b || !a) return require(false, "null graph");
  return write_report(out, [&] { return vramsey::run_forest(b->graph, a->graph, to_options(o)); });
}

vr_status vr_color_json(const vr_graph* g, const vr_graph* a, const vr_graph* b, const vr_options* o,
                        char** out) {
  if (!g || !a || !b) return require(false, "null graph");
  return write_report(out, [&] { return vramsey::run_color(g->graph, a->graph, b->graph, to_options(o)); });
}

vr_status vr_ramsey_json(const vr_graph* g, const vr_graph* a, const vr_options* o, char** out) {
  if (!g || !a) return require(false, "null graph");
  return write_report(out, [&] { return vramsey::run_ramsey(g->graph, a->graph, to_options(o)); });
}

vr_status vr_dense_json(const vr_graph* g, const vr_graph* a, const vr_options* o, char** out) {
  if (!g || !a) return require(false, "null graph");
  return write_report(out, [&] { return vramsey::run_dense(g->graph, a->graph, to_options(o)); });
}

vr_status vr_construct_json(const vr_graph* a, const vr_graph* const* family, size_t family_size,
                            const vr_options* o, char** out) {
  if (!a || (family_size > 0 && !family)) return require(false, "null graph");
  std::vector<vramsey::Graph> members;
  for (size_t i = 0; i < family_size; ++i) {
    if (!family[i]) return require(false, "null family member");
    members.push_back(family[i]->graph);
  }
  return write_report(out, [&] { return vramsey::run_construct(a->graph, members, to_options(o)); });
}

vr_status vr_covers_json(const vr_graph* b_prime, const vr_graph* a, const vr_options* o, char** out) {
  if (!b_prime || !a) return require(false, "null graph");
  return write_report(out, [&] { return vramsey::run_covers(b_prime->graph, a->graph, to_options(o)); });
}

vr_status vr_count_json(const vr_graph* b_prime, const vr_graph* a, const vr_options* o, char** out) {
  if (!b_prime || !a) return require(false, "null graph");
  return write_report(out, [&] { return vramsey::run_count(b_prime->graph, a->graph, to_options(o)); });
}

vr_status vr_estimate_density_json(const vr_graph* g, const vr_graph* a, const vr_options* o, char** out) {
  if (!g || !a) return require(false, "null graph");
  return write_report(out, [&] { return vramsey::run_estimate_density(g->graph, a->graph, to_options(o)); });
}

}  // extern "C"
