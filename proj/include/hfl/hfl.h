#ifndef HFL_HFL_H_
#define HFL_HFL_H_

/*
 * C interface to the hyperfiniteness toolkit: K-separators, Følner sets,
 * the greedy separator construction, the exact separator game, and
 * Schreier graphs of C2*C2*C2*C2.
 *
 * Objects are opaque handles released with the matching *_free call.
 * Every fallible call returns an hfl_status; on failure the message is
 * available from hfl_last_error() on the same thread until the next call.
 * Results are JSON documents in caller-owned strings released with
 * hfl_string_free(). Rationals in JSON are "p/q" strings.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HFL_BUILDING_LIBRARY)
#    define HFL_API __declspec(dllexport)
#  else
#    define HFL_API __declspec(dllimport)
#  endif
#else
#  define HFL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hfl_status {
  HFL_OK = 0,
  HFL_ERR_INVALID_ARGUMENT = 1,
  HFL_ERR_INVALID_VERTEX = 2,
  HFL_ERR_PARSE_MALFORMED = 3,
  HFL_ERR_PARSE_ENDPOINT = 4,
  HFL_ERR_PARSE_DEGREE = 5,
  HFL_ERR_SIZE_LIMIT = 6,
  HFL_ERR_NO_VERTICES = 7,
  HFL_ERR_VALIDATION = 8,
  HFL_ERR_INTERNAL = 9
} hfl_status;

typedef struct hfl_graph hfl_graph;
typedef struct hfl_action hfl_action;

typedef struct hfl_options {
  int enumeration_cap; /* exhaustive separator enumeration limit on n */
  int ula_cap;         /* exact ULA profile limit on n */
  int workers;         /* threads for subset scans; output is unaffected */
} hfl_options;

/* Defaults: enumeration_cap 20, ula_cap 14, workers 1. */
HFL_API void hfl_options_init(hfl_options* options);

HFL_API const char* hfl_last_error(void);
HFL_API const char* hfl_status_name(hfl_status status);
HFL_API void hfl_string_free(char* s);

/* Graph text: "n m d" header then m lines "u v"; '#' lines ignored. */
HFL_API hfl_status hfl_graph_parse(const char* text, size_t length,
                                   hfl_graph** out);
HFL_API hfl_status hfl_graph_emit(const hfl_graph* graph, char** out);
HFL_API int hfl_graph_vertex_count(const hfl_graph* graph);
HFL_API void hfl_graph_free(hfl_graph* graph);

/* Action text: "n" then four lines of n images (generators a..d). */
HFL_API hfl_status hfl_action_parse(const char* text, size_t length,
                                    hfl_action** out);
HFL_API hfl_status hfl_action_cycle(int n, hfl_action** out);
HFL_API hfl_status hfl_action_random(int n, uint64_t seed, hfl_action** out);
HFL_API void hfl_action_free(hfl_action* action);

/* Schreier graph of the action: graph text plus one generator label per
 * edge line, newline-separated, in the same order. */
HFL_API hfl_status hfl_schreier_emit(const hfl_action* action,
                                     char** graph_text, char** labels_text);

/* Separator lists; minimal != 0 keeps only inclusion-minimal ones. */
HFL_API hfl_status hfl_separators_json(const hfl_graph* graph, int k,
                                       int minimal, const hfl_options* options,
                                       char** out);

/* Vertex list is a JSON array of integers, e.g. "[1,3]". */
HFL_API hfl_status hfl_check_separator_json(const hfl_graph* graph,
                                            const char* vertices, int k,
                                            char** out);

HFL_API hfl_status hfl_folner_json(const hfl_graph* graph, const char* eps,
                                   int k, char** out);

HFL_API hfl_status hfl_greedy_json(const hfl_graph* graph, const char* eps,
                                   int k, char** out);

HFL_API hfl_status hfl_ula_profile_json(const hfl_graph* graph,
                                        const char* eps, int allow_approx,
                                        const hfl_options* options,
                                        char** out);

/* Exact game over minimal separators (all_separators != 0: every one). */
HFL_API hfl_status hfl_game_exact_json(const hfl_graph* graph, int k,
                                       int all_separators,
                                       const hfl_options* options, char** out);

HFL_API hfl_status hfl_game_mwu_json(const hfl_graph* graph, int k, int rounds,
                                     uint64_t seed, const hfl_options* options,
                                     char** out);

/* Exact game plus ULA profiles at eps 1/4, 1/2, 3/4. */
HFL_API hfl_status hfl_profile_json(const hfl_graph* graph, int k,
                                    const hfl_options* options, char** out);

/* Schreier summary; profile != 0 adds the exact game at k. */
HFL_API hfl_status hfl_schreier_json(const hfl_action* action, int profile,
                                     int k, const hfl_options* options,
                                     char** out);

/* Lowercase hex SHA-256 of a byte buffer. */
HFL_API hfl_status hfl_sha256_hex(const void* data, size_t length, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HFL_HFL_H_ */
