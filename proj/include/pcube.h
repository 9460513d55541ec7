/* C interface to the partial cube toolkit. Handles are opaque; every
 * function returns a status code and writes results through out
 * parameters. Strings returned through char** are owned by the caller
 * and released with pcube_string_free. Error details for the last
 * failing call on the current thread come from pcube_last_error. */
#ifndef PCUBE_H
#define PCUBE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PCUBE_API __declspec(dllexport)
#else
#define PCUBE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pcube_graph pcube_graph;

typedef enum pcube_status {
  PCUBE_OK = 0,
  PCUBE_ERR_PARSE = 1,    /* malformed graph6 or stream text */
  PCUBE_ERR_INVALID = 2,  /* precondition violated by the caller */
  PCUBE_ERR_LIMIT = 3,    /* input beyond a documented size bound */
  PCUBE_ERR_INTERNAL = 4  /* self-check failure inside the library */
} pcube_status;

PCUBE_API const char* pcube_status_name(pcube_status s);
PCUBE_API const char* pcube_last_error(void);
PCUBE_API void pcube_string_free(char* s);

/* Graph lifecycle */
PCUBE_API pcube_status pcube_graph_from_graph6(const char* line,
                                               pcube_graph** out);
/* Families: "hypercube" [d], "cycle" [k] (gives C_{2k}),
 * "middle-levels" [t], "product" [n, m] (n-cube times C_{2m}),
 * "x-graph" (no parameters). */
PCUBE_API pcube_status pcube_graph_generate(const char* family,
                                            const int32_t* params,
                                            size_t n_params, pcube_graph** out);
PCUBE_API void pcube_graph_free(pcube_graph* g);

PCUBE_API int32_t pcube_graph_order(const pcube_graph* g);
PCUBE_API int32_t pcube_graph_size(const pcube_graph* g);
PCUBE_API pcube_status pcube_graph_to_graph6(const pcube_graph* g, char** out);
PCUBE_API pcube_status pcube_graph_to_dot(const pcube_graph* g, char** out);
PCUBE_API pcube_status pcube_is_partial_cube(const pcube_graph* g,
                                             int32_t* verdict);

/* Reports (JSON text) */
PCUBE_API pcube_status pcube_analyze_json(const pcube_graph* g, char** json_out);
PCUBE_API pcube_status pcube_verify_json(const pcube_graph* g, char** json_out,
                                         int32_t* violation_count);
/* DOT of the zone graph of one class; the graph must be a partial cube. */
PCUBE_API pcube_status pcube_zone_dot(const pcube_graph* g, int32_t class_index,
                                      char** dot_out);

/* Census over graph6 lines (newline separated) or over the built-in
 * d-cube enumeration. csv_out may be NULL when the per-graph table is
 * not wanted; per_graph also controls the JSON rows. Unparseable lines
 * are reported in the JSON and counted through parse_error_count; the
 * rest of the stream is still processed. */
PCUBE_API pcube_status pcube_census_lines(const char* graph6_lines,
                                          int32_t per_graph, int32_t workers,
                                          char** json_out, char** csv_out,
                                          int32_t* violation_count,
                                          int32_t* parse_error_count);
PCUBE_API pcube_status pcube_census_qd(int32_t dim, int32_t max_n,
                                       int32_t per_graph, int32_t workers,
                                       char** json_out, char** csv_out,
                                       int32_t* violation_count);

#ifdef __cplusplus
}
#endif

#endif /* PCUBE_H */
