#ifndef LIEREP_H
#define LIEREP_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes.
typedef enum LierepStatus {
  LIEREP_STATUS_OK = 0,
  LIEREP_STATUS_NULL_POINTER = 1,
  LIEREP_STATUS_INVALID_UTF8 = 2,
  LIEREP_STATUS_PARSE = 3,
  LIEREP_STATUS_INVALID_ARGUMENT = 4,
  LIEREP_STATUS_UNSUPPORTED = 5,
  LIEREP_STATUS_ALPHA_UNAVAILABLE = 6,
  LIEREP_STATUS_FORMAT = 7,
  LIEREP_STATUS_IO = 8,
  LIEREP_STATUS_PANIC = 9,
} LierepStatus;

// A reductive Lie algebra.
typedef struct LierepAlgebra LierepAlgebra;

// A matrix representation of a reductive Lie algebra.
typedef struct LierepRep LierepRep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the
// next failing call on the same thread.
const char *lierep_last_error(void);

// Parse an expression such as `"A1+C3+C^6"`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum LierepStatus lierep_algebra_parse(const char *text, struct LierepAlgebra **out);

// # Safety
// `g` must come from this library and not be used afterwards; NULL is ignored.
void lierep_algebra_free(struct LierepAlgebra *g);

// Canonical expression string; free with [`lierep_string_free`].
//
// # Safety
// Pointers must be valid.
enum LierepStatus lierep_algebra_to_string(const struct LierepAlgebra *g, char **out);

// Minimal faithful degree.
//
// # Safety
// Pointers must be valid.
enum LierepStatus lierep_algebra_mu(const struct LierepAlgebra *g, uint64_t *out);

// Dimension.
//
// # Safety
// Pointers must be valid.
enum LierepStatus lierep_algebra_dim(const struct LierepAlgebra *g, uint64_t *out);

// Maximal abelian subalgebra dimension; `AlphaUnavailable` when not known.
//
// # Safety
// Pointers must be valid.
enum LierepStatus lierep_algebra_alpha(const struct LierepAlgebra *g, uint64_t *out);

// Nilpotent bound `p(n, k)` as a decimal string; free with
// [`lierep_string_free`].
//
// # Safety
// `out` must be valid.
enum LierepStatus lierep_nilbound(size_t n, size_t k, char **out);

// Faithful representation of degree `mu(g)`.
//
// # Safety
// Pointers must be valid.
enum LierepStatus lierep_rep_construct(const struct LierepAlgebra *g, struct LierepRep **out);

// Read a representation from its JSON text.
//
// # Safety
// `json` must be a NUL-terminated string and `out` valid.
enum LierepStatus lierep_rep_from_json(const char *json, struct LierepRep **out);

// # Safety
// `r` must come from this library and not be used afterwards; NULL is ignored.
void lierep_rep_free(struct LierepRep *r);

// Matrix size.
//
// # Safety
// Pointers must be valid.
enum LierepStatus lierep_rep_degree(const struct LierepRep *r, size_t *out);

// JSON representation file text; free with [`lierep_string_free`].
//
// # Safety
// Pointers must be valid.
enum LierepStatus lierep_rep_to_json(const struct LierepRep *r, char **out);

// Check brackets against the algebra's structure constants. Writes whether
// every bracket is preserved and the kernel dimension.
//
// # Safety
// Pointers must be valid.
enum LierepStatus lierep_rep_verify(const struct LierepRep *r,
                                    bool *homomorphism,
                                    size_t *kernel_dim);

// # Safety
// `s` must come from this library and not be used afterwards; NULL is ignored.
void lierep_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* LIEREP_H */
