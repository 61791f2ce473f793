/* nfrob — exact computation of nearly Frobenius structures and Yang-Baxter
 * solutions for finite-dimensional associative algebras over Q, F_p and Z.
 *
 * C interface of the shared library. All functions are thread-safe; handles
 * are immutable after creation and may be shared across threads. Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with nf_string_free. On any failure the return code identifies
 * the error class and nf_last_error() carries a message for the calling
 * thread.
 *
 * Algebra descriptions and reports are UTF-8 JSON; every scalar travels as a
 * string ("2/7", "-3", "4") so no value is ever rounded.
 */

#ifndef NFROB_H
#define NFROB_H

#include <stdint.h>

#if defined(_WIN32)
#define NFROB_API __declspec(dllexport)
#else
#define NFROB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nf_status {
  NF_OK = 0,
  NF_ERROR_PARSE = 1,
  NF_ERROR_VALIDATION = 2,
  NF_ERROR_WRONG_RING = 3,
  NF_ERROR_DIMENSION_MISMATCH = 4,
  NF_ERROR_SINGULAR = 5,
  NF_ERROR_NOT_UNIMODULAR = 6,
  NF_ERROR_NOT_CENTRAL = 7,
  NF_ERROR_NO_SOLUTION = 8,
  NF_ERROR_INFINITE_DIMENSIONAL = 9,
  NF_ERROR_LIMIT_EXCEEDED = 10,
  NF_ERROR_NOT_PRIME = 11,
  NF_ERROR_DETERMINISTIC_TOO_LARGE = 12,
  NF_ERROR_INVALID_ARGUMENT = 13,
  NF_ERROR_INTERNAL = 14
} nf_status;

/* Opaque handle to a validated algebra. */
typedef struct nf_algebra nf_algebra;

NFROB_API const char* nf_version(void);
NFROB_API const char* nf_status_name(nf_status status);

/* Message describing the most recent failure on this thread ("" if none). */
NFROB_API const char* nf_last_error(void);

/* Build an algebra from an algebra-description JSON document (see README for
 * the schema). The table is validated (associativity + unit) before the
 * handle is returned. */
NFROB_API nf_status nf_algebra_from_json(const char* json_text,
                                         nf_algebra** out);
NFROB_API nf_status nf_algebra_from_file(const char* path, nf_algebra** out);
NFROB_API void nf_algebra_free(nf_algebra* a);

NFROB_API int64_t nf_algebra_dim(const nf_algebra* a);

/* "Q", "Z" or "F<p>". */
NFROB_API const char* nf_algebra_ring(const nf_algebra* a);

/* Dimension of the Frobenius space (rank of the central lattice over Z). */
NFROB_API nf_status nf_frobdim(const nf_algebra* a, int64_t* out);

/* Canonical basis of the space of A-central elements of A(x)A, as a JSON
 * array of n x n coefficient-string matrices. */
NFROB_API nf_status nf_central_basis_json(const nf_algebra* a, char** out);

/* Centrality test for a tensor given as an n x n coefficient-string matrix
 * (the format emitted by nf_central_basis_json). *out is 1 or 0. */
NFROB_API nf_status nf_is_central_json(const nf_algebra* a,
                                       const char* tensor_json, int* out);

/* Run one CLI-level command and return the full JSON report.
 *
 * command: validate | central-basis | frobdim | frobenius-check |
 *          frobenius-data | theorem-a | ybe | ar
 * flags_json: JSON object, may be NULL or "" for defaults. Keys: trials,
 *          seed, height, deterministic, epsilon, which, all_generators,
 *          generator, check_central.
 *
 * A mathematical verdict failure is NOT an error: the call returns NF_OK and
 * the report carries "all_pass": false. Errors mean the command could not
 * run at all. */
NFROB_API nf_status nf_run_command(const char* command, const char* spec_json,
                                   const char* flags_json, char** out_report);
NFROB_API nf_status nf_run_command_file(const char* command,
                                        const char* spec_path,
                                        const char* flags_json,
                                        char** out_report);

NFROB_API void nf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* NFROB_H */
