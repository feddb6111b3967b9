#ifndef VRAMSEY_H
#define VRAMSEY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define VR_API __declspec(dllexport)
#else
#  define VR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vr_status {
  VR_OK = 0,
  VR_UNKNOWN = 1, /* report produced, but a budget ran out before a decision */
  VR_ERR_MALFORMED_INPUT = 10,
  VR_ERR_INVALID_VERTEX = 11,
  VR_ERR_INVALID_ARGUMENT = 12,
  VR_ERR_NOT_DEGENERATE = 13,
  VR_ERR_IS_DEGENERATE = 14,
  VR_ERR_NOT_APPLICABLE = 15,
  VR_ERR_UNSUPPORTED_PATTERN = 16,
  VR_ERR_SUBSET_SPACE_TOO_LARGE = 17,
  VR_ERR_TOO_LARGE = 18,
  VR_ERR_PARAM_OUT_OF_RANGE = 19,
  VR_ERR_INTERNAL = 20
} vr_status;

/* Immutable simple graph on vertices 0..n-1. */
typedef struct vr_graph vr_graph;

typedef struct vr_options {
  int r;
  double eps;
  int n;
  uint64_t trials;
  uint64_t seed;
  uint64_t budget; /* 0 keeps the command's default */
  unsigned jobs;
  uint64_t copy_limit;
  int max_ell; /* 0 means unbounded */
  double p;
  int has_p; /* nonzero: use p instead of n^(1-a+eps) */
  double deletion_c;
  long long subset_size; /* negative: derive from eps */
  int exact;
} vr_options;

VR_API void vr_options_init(vr_options* options);

VR_API vr_status vr_graph_from_graph6(const char* text, vr_graph** out);
VR_API vr_status vr_graph_from_edge_list(const char* text, vr_graph** out);
/* Edge list if the text starts with a digit, '#' or "n=", graph6 otherwise. */
VR_API vr_status vr_graph_from_text(const char* text, vr_graph** out);
VR_API void vr_graph_free(vr_graph* g);
VR_API int vr_graph_order(const vr_graph* g);
VR_API size_t vr_graph_size(const vr_graph* g);
VR_API vr_status vr_graph_to_graph6(const vr_graph* g, char** out);

/* Strings returned through `char** out` are owned by the caller. */
VR_API void vr_string_free(char* s);

/* Message of the last failed call on this thread; empty if none. */
VR_API const char* vr_last_error(void);
VR_API const char* vr_status_name(vr_status status);

/* JSON report writers. On VR_OK or VR_UNKNOWN *out holds the report. */
VR_API vr_status vr_blocks_json(const vr_graph* g, char** out);
VR_API vr_status vr_degenerate_json(const vr_graph* b, const vr_graph* a, char** out);
VR_API vr_status vr_forest_json(const vr_graph* b, const vr_graph* a, const vr_options* o, char** out);
VR_API vr_status vr_color_json(const vr_graph* g, const vr_graph* a, const vr_graph* b, const vr_options* o,
                               char** out);
VR_API vr_status vr_ramsey_json(const vr_graph* g, const vr_graph* a, const vr_options* o, char** out);
VR_API vr_status vr_dense_json(const vr_graph* g, const vr_graph* a, const vr_options* o, char** out);
VR_API vr_status vr_construct_json(const vr_graph* a, const vr_graph* const* family, size_t family_size,
                                   const vr_options* o, char** out);
VR_API vr_status vr_covers_json(const vr_graph* b_prime, const vr_graph* a, const vr_options* o, char** out);
VR_API vr_status vr_count_json(const vr_graph* b_prime, const vr_graph* a, const vr_options* o, char** out);
VR_API vr_status vr_estimate_density_json(const vr_graph* g, const vr_graph* a, const vr_options* o,
                                          char** out);

#ifdef __cplusplus
}
#endif

#endif
