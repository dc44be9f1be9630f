#ifndef FTPOLY_FTPOLY_H
#define FTPOLY_FTPOLY_H

/*
 * C interface to the ftpoly library: Exact Partition instances, the vertex
 * structure of their knapsack-cut cube relaxation, and the reports built on it.
 *
 * Every function returns an ft_status. Objects are opaque handles released
 * with their matching *_free function. Strings returned through char** are
 * heap-allocated and released with ft_string_free. After a failing call,
 * ft_last_error() describes the failure on the calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define FT_API __declspec(dllexport)
#else
#  define FT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ft_status {
  FT_OK = 0,
  FT_ERR_INVALID_ARGUMENT = 1,
  FT_ERR_EMPTY = 2,
  FT_ERR_ODD_COUNT = 3,
  FT_ERR_OUT_OF_RANGE = 4,
  FT_ERR_NOT_POSITIVE = 5,
  FT_ERR_DIMENSION_MISMATCH = 6,
  FT_ERR_DIMENSION_CAP = 7,
  FT_ERR_SCALE_CAP = 8,
  FT_ERR_NOT_A_PARTITION = 9,
  FT_ERR_NOT_HALF_MAX = 10,
  FT_ERR_INDEX_IN_SUBSET = 11,
  FT_ERR_DISCONNECTED = 12,
  FT_ERR_PARSE = 13,
  FT_ERR_IO = 14,
  FT_ERR_INTERNAL = 15
} ft_status;

typedef enum ft_format { FT_FORMAT_INE = 0, FT_FORMAT_EXT = 1, FT_FORMAT_JSON = 2 } ft_format;

typedef struct ft_instance ft_instance;
typedef struct ft_polytope ft_polytope;

typedef struct ft_analyze_options {
  int preprocess;  /* non-zero: make s_max odd before building P_R */
  size_t max_dim;  /* 0 selects the default cap of 16 */
  int json;        /* non-zero: JSON report, otherwise a text table */
} ft_analyze_options;

FT_API const char* ft_status_string(ft_status status);
FT_API const char* ft_last_error(void);
FT_API void ft_string_free(char* s);

/* --- instances ---------------------------------------------------------- */

FT_API ft_status ft_instance_create(const int64_t* elements, size_t count, ft_instance** out);
/* Instance text: integers separated by whitespace or commas, '#' comments,
 * or a JSON object {"elements": [...]}. */
FT_API ft_status ft_instance_parse(const char* text, ft_instance** out);
FT_API void ft_instance_free(ft_instance* inst);
FT_API size_t ft_instance_size(const ft_instance* inst);
/* Copies min(capacity, size) elements into buffer. */
FT_API ft_status ft_instance_elements(const ft_instance* inst, int64_t* buffer, size_t capacity);
FT_API ft_status ft_instance_translate_positive(const ft_instance* inst, ft_instance** out, int64_t* shift);
FT_API ft_status ft_instance_oddify(const ft_instance* inst, ft_instance** out, int* added);

/* --- polytope P_R ------------------------------------------------------- */

/* Builds P_R of a positive instance and enumerates its vertices.
 * max_dim = 0 selects the default cap. */
FT_API ft_status ft_polytope_create(const ft_instance* inst, size_t max_dim, ft_polytope** out);
/* Reads an H-representation previously written with FT_FORMAT_INE. */
FT_API ft_status ft_polytope_from_ine(const char* text, size_t max_dim, ft_polytope** out);
FT_API void ft_polytope_free(ft_polytope* poly);
FT_API size_t ft_polytope_dimension(const ft_polytope* poly);
FT_API size_t ft_polytope_vertex_count(const ft_polytope* poly);
FT_API size_t ft_polytope_degenerate_count(const ft_polytope* poly);
/* Coordinate `coord` of vertex `vertex` as "p/q" text. */
FT_API ft_status ft_polytope_vertex_coord(const ft_polytope* poly, size_t vertex, size_t coord, char** out);
FT_API ft_status ft_polytope_vertex_active_count(const ft_polytope* poly, size_t vertex, size_t* out);
/* FT_FORMAT_INE, FT_FORMAT_EXT, or FT_FORMAT_JSON (full analysis report). */
FT_API ft_status ft_polytope_export(const ft_polytope* poly, ft_format format, char** out);

/* --- commands ----------------------------------------------------------- */

/* Full analysis pipeline. *verifiers_ok is 1 when every check held. */
FT_API ft_status ft_analyze(const ft_instance* inst, const ft_analyze_options* opts, char** report,
                            int* verifiers_ok);
/* Partition oracle plus ILP2 brute force. *has_partition is 1 on YES,
 * *consistent is 1 when the two agree. */
FT_API ft_status ft_solve(const ft_instance* inst, char** text, int* has_partition, int* consistent);
/* Randomized verifier batch. *all_pass is 1 when nothing failed. */
FT_API ft_status ft_check_lemmas(size_t count, uint64_t seed, const size_t* sizes, size_t size_count,
                                 char** summary, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* FTPOLY_FTPOLY_H */
