#ifndef SIMCERT_SIMCERT_H
#define SIMCERT_SIMCERT_H

/* C interface to the similarity-certificate library.
 *
 * Matrices and results are opaque handles owned by the caller and released
 * with simcert_matrix_free / simcert_result_free. Every operation returns a
 * simcert_status; on failure simcert_last_error() describes the problem for
 * the calling thread. Result payloads are canonical JSON documents. */

#include <stddef.h>
#include <stdint.h>

#if defined(SIMCERT_BUILDING_LIBRARY)
#define SIMCERT_API __attribute__((visibility("default")))
#else
#define SIMCERT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct simcert_matrix simcert_matrix;
typedef struct simcert_result simcert_result;

typedef enum simcert_status {
  SIMCERT_OK = 0,
  SIMCERT_ERR_PARSE = 1,
  SIMCERT_ERR_INVALID_ARGUMENT = 2,
  SIMCERT_ERR_SCALAR_MATRIX = 3,
  SIMCERT_ERR_TRACE_MISMATCH = 4,
  SIMCERT_ERR_IDEAL_NOT_UNIT = 5,
  SIMCERT_ERR_DIMENSION = 6,
  SIMCERT_ERR_NO_UNIT = 7,
  SIMCERT_ERR_SEARCH_EXHAUSTED = 8,
  SIMCERT_UNDECIDED = 9, /* decision procedure returned Unknown; result is still produced */
  SIMCERT_ERR_UNVERIFIED = 10,
  SIMCERT_ERR_INTEGRALITY = 11,
  SIMCERT_ERR_INTERNAL = 12
} simcert_status;

/* Process exit code for a status: 0 success, 2 precondition or input error,
 * 3 search exhausted or undecided, 1 internal defect. */
SIMCERT_API int simcert_status_exit_code(simcert_status status);
SIMCERT_API const char* simcert_status_name(simcert_status status);

/* Message for the most recent failure on this thread ("" if none). */
SIMCERT_API const char* simcert_last_error(void);

/* Matrix JSON: {"ring": "Z"|"Q"|"Fp"|"Qbeta", "p": prime, "n": n, "entries": [[...]]}. */
SIMCERT_API simcert_status simcert_matrix_parse(const char* json_text, simcert_matrix** out);
SIMCERT_API void simcert_matrix_free(simcert_matrix* m);
/* Converts Z -> Q, Z -> Fp (p required), Z/Q -> Qbeta. */
SIMCERT_API simcert_status simcert_matrix_convert(const simcert_matrix* m, const char* ring, int64_t p,
                                                  simcert_matrix** out);
SIMCERT_API size_t simcert_matrix_dim(const simcert_matrix* m);
/* "Z", "Q", "Fp" or "Qbeta". */
SIMCERT_API const char* simcert_matrix_ring(const simcert_matrix* m);
SIMCERT_API simcert_status simcert_matrix_json(const simcert_matrix* m, simcert_result** out);

/* Targets are comma-separated ring elements in the matrix's ring
 * ("3,0,-3", "1/2,-1/2", "1:0:0,0:-1:0" for Qbeta in beta-coordinates). */

/* Field similarity. Integer input is treated as rational. */
SIMCERT_API simcert_status simcert_prescribe_field(const simcert_matrix* a, const char* target,
                                                   simcert_result** out);
/* Rational conjugation of an integer matrix to an integer matrix. */
SIMCERT_API simcert_status simcert_prescribe_ksim(const simcert_matrix* a, const char* target, uint64_t seed,
                                                  simcert_result** out);
/* Unimodular conjugation, n >= 3, unit nonscalarity ideal. */
SIMCERT_API simcert_status simcert_prescribe_zsim(const simcert_matrix* a, const char* target, uint64_t seed,
                                                  simcert_result** out);
SIMCERT_API simcert_status simcert_check_ideal(const simcert_matrix* a, simcert_result** out);
SIMCERT_API simcert_status simcert_rcf(const simcert_matrix* a, uint64_t seed, simcert_result** out);
SIMCERT_API simcert_status simcert_charpoly(const simcert_matrix* a, simcert_result** out);
SIMCERT_API simcert_status simcert_minpoly(const simcert_matrix* a, simcert_result** out);
/* 2x2 unimodular decision. Returns SIMCERT_UNDECIDED (with a result) for Unknown. */
SIMCERT_API simcert_status simcert_decide_2x2(const simcert_matrix* a, const char* target, int64_t bound,
                                              simcert_result** out);
/* Forced-product obstruction over Z[cbrt(16)]. With a == NULL and target == NULL
 * runs the built-in 3x3 example with target (1,-1,0). */
SIMCERT_API simcert_status simcert_counterexample(const simcert_matrix* a, const char* target,
                                                  simcert_result** out);

/* Checks a certificate JSON document against A. Sets *ok to 1 or 0. */
SIMCERT_API simcert_status simcert_verify_certificate_json(const simcert_matrix* a, const char* certificate_json,
                                                           int* ok);

/* Canonical JSON text; owned by the result. */
SIMCERT_API const char* simcert_result_json(const simcert_result* r);
SIMCERT_API void simcert_result_free(simcert_result* r);

#ifdef __cplusplus
}
#endif

#endif
