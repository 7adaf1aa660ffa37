/* C interface to the group-spectra library.
 *
 * All functions return a gs_status; every non-GS_OK return leaves a
 * human-readable message in gs_last_error() (thread-local, valid until the
 * next library call on that thread). Strings returned through char** are
 * heap-allocated and must be released with gs_string_free().
 */
#ifndef GROUPSPEC_H
#define GROUPSPEC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gs_status {
  GS_OK = 0,
  GS_ERR_INVALID_ARG = 1,
  GS_ERR_PARSE = 2,
  GS_ERR_UNSUPPORTED = 3,
  GS_ERR_NUMERIC = 4,
  GS_ERR_IO = 5,
  GS_ERR_INTERNAL = 6
} gs_status;

/* Opaque handles. A gs_group owns the group tables, its irreducible
 * representations, and a coupling-matrix cache; gs_function values remain
 * tied to the gs_group they were loaded with and must not outlive it. */
typedef struct gs_group gs_group;
typedef struct gs_function gs_function;

const char* gs_status_message(gs_status status);
const char* gs_last_error(void);
void gs_string_free(char* s);

/* spec: "sym:<n>" or "cyclic:<n>" */
gs_status gs_group_create(const char* spec, gs_group** out);
void gs_group_release(gs_group* g);
int64_t gs_group_order(const gs_group* g);
const char* gs_group_name(const gs_group* g);

/* Load a function from a file.
 *   format   "csv", "json", or NULL to pick by file extension
 *   kind     "group" (function on the whole group; default when NULL),
 *            "coset-left" (on G/H), or "coset-right" (on H\G)
 *   subgroup required for coset kinds: "sym:<k>" or cycle-notation
 *            generators; ignored otherwise
 * rows_out/missing_out (optional) report how many entries the file supplied
 * and how many defaulted to zero. */
gs_status gs_function_load(gs_group* g, const char* path, const char* format, const char* kind,
                           const char* subgroup, gs_function** out, int64_t* rows_out,
                           int64_t* missing_out);
/* values: 2*n doubles, re/im interleaved, n = group order ("group" kind). */
gs_status gs_function_from_values(gs_group* g, const double* values, int64_t n, gs_function** out);
void gs_function_release(gs_function* f);

/* Fourier coefficients of a "group"-kind function, as a JSON array of
 * {"irrep", "matrix"} objects. */
gs_status gs_fourier_json(gs_function* f, char** json_out);

/* kind: "power" | "bispectrum" | "triple" | "skew" (group functions)
 *       | "skew-restricted" (coset-left functions)
 * side: "left" | "right" (NULL means left; triple and skew-restricted are
 * left-handed only). Appends the scalar-operation counters. */
gs_status gs_spectra_json(gs_function* f, const char* kind, const char* side, char** json_out);

/* Triple correlation to the dense TC01 binary format. */
gs_status gs_triple_binary(gs_function* f, const char* path);

/* Skew-spectrum equivalence decision. verdict_out: 0 equivalent, 1 distinct,
 * 2 inconclusive. tol <= 0 selects the default 1e-8. */
gs_status gs_compare(gs_function* f1, gs_function* f2, const char* side, double tol, int* verdict_out,
                     char** json_out);

/* Scalar-operation counts for the triple correlation, bispectrum, and skew
 * spectrum of the same input. */
gs_status gs_bench_json(gs_function* f, char** json_out);

/* Rank condition for a coset-right function; tol <= 0 selects 1e-8. */
gs_status gs_rank_json(gs_function* f, double tol, char** json_out);

/* Seeded randomized self-check (round-trip, Parseval, convolution theorem,
 * translation covariance) on the given group; reports residuals. */
gs_status gs_selftest_json(gs_group* g, uint64_t seed, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GROUPSPEC_H */
