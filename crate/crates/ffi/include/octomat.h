/* C ABI for the exact e8 structure-constant tables.
 *
 * Written by hand and kept in sync with src/lib.rs by tests/header_sync.rs.
 *
 * Usage sketch:
 *
 *   octomat_table *t = NULL;
 *   if (octomat_table_new(1, 0, &t) != OCTOMAT_OK) abort();
 *   int n = octomat_basis_count(t);           // 248
 *   int32_t ks[8]; int64_t nums[8], dens[8];
 *   int terms = octomat_bracket_terms(t, 0, 1, ks, nums, dens, 8);
 *   octomat_table_free(t);
 */

#ifndef OCTOMAT_H
#define OCTOMAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
#define OCTOMAT_OK 0
#define OCTOMAT_ERR_NULL_ARG 1
#define OCTOMAT_ERR_BAD_ARG 2
#define OCTOMAT_ERR_CLOSURE 3
#define OCTOMAT_ERR_BUFFER_TOO_SMALL 4

/* Opaque table handle. */
typedef struct octomat_table octomat_table;

/* Builds the 248-dimensional table for the requested factor algebras
 * (nonzero = split octonions, 0 = division octonions). Writes a handle to
 * *out on success. */
int octomat_table_new(int left_split, int right_split, octomat_table **out);

/* Frees a handle. Null is a no-op. */
void octomat_table_free(octomat_table *t);

/* Basis dimension (248), or -1 on null. */
int octomat_basis_count(const octomat_table *t);

/* Copies the NUL-terminated printed name of basis element i into buf. */
int octomat_basis_name(const octomat_table *t, int i, char *buf, size_t len);

/* Number of nonzero terms in [e_i, e_j], or -1 on invalid input. */
int octomat_bracket_term_count(const octomat_table *t, int i, int j);

/* Writes the terms of [e_i, e_j] as parallel arrays (basis index, exact
 * numerator, exact denominator). Returns the number of terms written, or -1
 * on invalid input or insufficient capacity. */
int octomat_bracket_terms(const octomat_table *t, int i, int j, int32_t *ks,
                          int64_t *nums, int64_t *dens, size_t cap);

/* Killing-form signature (n_plus, n_minus, n_zero) of the real form. */
int octomat_killing_signature(const octomat_table *t, int *plus, int *minus,
                              int *zero);

/* Exhaustive Jacobi sweep over all C(248,3) = 2,511,496 basis triples;
 * defects is 0 on a valid Lie algebra. */
int octomat_verify_jacobi(const octomat_table *t, uint64_t *attempted,
                          uint64_t *defects);

/* Full export document (basis names, brackets, Killing data, digest) as a
 * heap-allocated JSON string; free with octomat_string_free. */
int octomat_export_json(const octomat_table *t, char **out);

/* Frees a string returned by octomat_export_json. Null is a no-op. */
void octomat_string_free(char *s);

/* Copies the NUL-terminated convention version tag (unit ordering and
 * diagonal pair orientation) into buf. */
int octomat_convention_version(char *buf, size_t len);

#ifdef __cplusplus
}
#endif

#endif /* OCTOMAT_H */
