/*
 * C interface to the threshold-graph characteristic polynomial library.
 *
 * Conventions:
 *  - Every fallible call returns a thresh_status; THRESH_OK is 0.
 *  - On failure, thresh_last_error() returns a message for the calling
 *    thread, valid until its next library call.
 *  - Polynomials are opaque handles released with thresh_poly_free.
 *  - Strings returned through char** are released with thresh_string_free.
 *  - Big integers cross the boundary as decimal strings.
 */
#ifndef THRESH_H
#define THRESH_H

#include <stddef.h>
#include <stdint.h>

#if defined(THRESH_BUILDING_LIBRARY)
#define THRESH_API __attribute__((visibility("default")))
#else
#define THRESH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum thresh_status {
  THRESH_OK = 0,
  THRESH_E_PARSE = 1,      /* malformed creation sequence, integer or polynomial */
  THRESH_E_DOMAIN = 2,     /* argument outside the operation's domain */
  THRESH_E_CAP = 3,        /* dense oracle asked for n above the cap */
  THRESH_E_NULL = 4,       /* required pointer argument was NULL */
  THRESH_E_INTERNAL = 5,   /* exactness check failed or unexpected exception */
  THRESH_E_NOMEM = 6
} thresh_status;

typedef enum thresh_algo {
  THRESH_ALGO_AUTO = 0,
  THRESH_ALGO_QUADRATIC = 1,
  THRESH_ALGO_BALANCED = 2,
  THRESH_ALGO_ORACLE = 3,
  THRESH_ALGO_INTERP = 4
} thresh_algo;

typedef struct thresh_poly thresh_poly;

THRESH_API const char* thresh_last_error(void);
THRESH_API const char* thresh_status_name(thresh_status status);
THRESH_API void thresh_string_free(char* s);

/* Parses "auto", "quadratic", "balanced", "oracle" or "interp". */
THRESH_API thresh_status thresh_algo_from_name(const char* name, thresh_algo* out);

/* ---- configuration (process-wide) ---- */
THRESH_API size_t thresh_oracle_cap(void);
THRESH_API void thresh_set_oracle_cap(size_t cap);
THRESH_API size_t thresh_auto_crossover(void);
THRESH_API void thresh_set_auto_crossover(size_t n);
THRESH_API size_t thresh_kronecker_cutoff(void);
THRESH_API void thresh_set_kronecker_cutoff(size_t cutoff);

/* ---- graphs: creation sequences are strings over {0,1} of length n-1 ---- */
THRESH_API thresh_status thresh_vertex_count(const char* bits, size_t* out);
THRESH_API thresh_status thresh_edge_query(const char* bits, size_t i, size_t j, int* out);
THRESH_API thresh_status thresh_edge_count(const char* bits, uint64_t* out);
/* Uniform random creation sequence for n vertices; reproducible per seed. */
THRESH_API thresh_status thresh_random_sequence(uint64_t seed, size_t n, char** out);

/* ---- determinants and characteristic polynomials ---- */

/* det of the weighted threshold matrix with off-diagonal values b[0..nb)
 * and diagonal d[0..nd); requires nd >= 1 and nb == nd - 1. */
THRESH_API thresh_status thresh_det(const char* const* b, size_t nb, const char* const* d,
                                    size_t nd, char** out);

/* chi(G, at) for the graph given by its creation sequence. */
THRESH_API thresh_status thresh_eval(const char* bits, const char* at, char** out);

/* threads == 0 uses all hardware threads (balanced algorithm only). */
THRESH_API thresh_status thresh_charpoly(const char* bits, thresh_algo algo, unsigned threads,
                                         thresh_poly** out);

/* det(lambda I - M) for a weighted threshold matrix. */
THRESH_API thresh_status thresh_charpoly_weighted(const char* const* b, size_t nb,
                                                  const char* const* d, size_t nd,
                                                  thresh_poly** out);

/* ---- polynomial handles ---- */
THRESH_API void thresh_poly_free(thresh_poly* p);
/* Number of stored coefficients (degree + 1; 0 for the zero polynomial). */
THRESH_API size_t thresh_poly_length(const thresh_poly* p);
THRESH_API size_t thresh_poly_max_bits(const thresh_poly* p);
THRESH_API thresh_status thresh_poly_coeff(const thresh_poly* p, size_t k, char** out);
THRESH_API int thresh_poly_equal(const thresh_poly* a, const thresh_poly* b);
THRESH_API thresh_status thresh_poly_eval(const thresh_poly* p, const char* at, char** out);
/* JSON array of decimal strings, low-to-high degree. */
THRESH_API thresh_status thresh_poly_to_json(const thresh_poly* p, char** out);
THRESH_API thresh_status thresh_poly_from_json(const char* json, thresh_poly** out);
/* Human-readable form, e.g. "λ^3 - 3λ - 2". */
THRESH_API thresh_status thresh_poly_to_text(const thresh_poly* p, char** out);
THRESH_API thresh_status thresh_poly_from_text(const char* text, thresh_poly** out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // THRESH_H
