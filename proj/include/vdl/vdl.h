/*
 * vdl -- divisor counting, deterministic primality, integer factorization,
 * exact sqrt(2) rationals, and a claim-verification harness for the numeric
 * assertions of the Vedic texts.
 *
 * C surface of the shared library. Conventions:
 *   - every fallible call returns vdl_status; VDL_OK means success
 *   - on failure, vdl_last_error() returns a message for the calling thread
 *   - opaque handles are created by vdl_* calls and released by the matching
 *     *_free; freeing NULL is a no-op
 *   - accessor index arguments must be below the reported size
 *   - naturals live in [1, 2^63 - 1]; 0 in a multiple_of / max_range slot
 *     means "not set"
 */

#ifndef VDL_H
#define VDL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vdl_status {
  VDL_OK = 0,
  VDL_ERR_DOMAIN = 1,          /* input outside the supported domain */
  VDL_ERR_RANGE = 2,           /* result exceeds the supported range */
  VDL_ERR_NO_SUCH_DIVISOR = 3, /* no divisor strictly below its companion */
  VDL_ERR_RESOURCE_LIMIT = 4,  /* request exceeds a documented bound */
  VDL_ERR_VALIDATION = 5,      /* malformed claim, registry, or argument */
  VDL_ERR_INTERNAL = 6         /* invariant breach; indicates a bug */
} vdl_status;

const char* vdl_status_name(vdl_status status);

/* Message describing this thread's most recent failure; empty until then. */
const char* vdl_last_error(void);

const char* vdl_version(void);

/* ------------------------------------------------------------------ */
/* Primality and factorization                                         */
/* ------------------------------------------------------------------ */

vdl_status vdl_is_prime(uint64_t n, int* out_is_prime);

typedef struct vdl_factorization vdl_factorization;

vdl_status vdl_factorize(uint64_t n, vdl_factorization** out);
size_t vdl_factorization_size(const vdl_factorization* f);
uint64_t vdl_factorization_prime(const vdl_factorization* f, size_t index);
uint32_t vdl_factorization_exponent(const vdl_factorization* f, size_t index);
void vdl_factorization_free(vdl_factorization* f);

/* Product of primes[i]^exponents[i]; entries must form a canonical
 * factorization (ascending primes, exponents >= 1). */
vdl_status vdl_reconstruct(const uint64_t* primes, const uint32_t* exponents,
                           size_t count, uint64_t* out_value);

/* ------------------------------------------------------------------ */
/* Divisors                                                            */
/* ------------------------------------------------------------------ */

typedef struct vdl_u64_list vdl_u64_list;

size_t vdl_u64_list_size(const vdl_u64_list* list);
uint64_t vdl_u64_list_get(const vdl_u64_list* list, size_t index);
void vdl_u64_list_free(vdl_u64_list* list);

vdl_status vdl_count_divisors(uint64_t n, uint64_t* out_count);
vdl_status vdl_enumerate_divisors(uint64_t n, vdl_u64_list** out);

typedef struct vdl_pairing vdl_pairing;

vdl_status vdl_pair_divisors(uint64_t n, vdl_pairing** out);
size_t vdl_pairing_strict_count(const vdl_pairing* p);
uint64_t vdl_pairing_minor(const vdl_pairing* p, size_t index);
uint64_t vdl_pairing_companion(const vdl_pairing* p, size_t index);
int vdl_pairing_has_self_pair(const vdl_pairing* p);
/* Valid only when a self pair exists; returns 0 otherwise. */
uint64_t vdl_pairing_self_pair(const vdl_pairing* p);
void vdl_pairing_free(vdl_pairing* p);

vdl_status vdl_pair_count(uint64_t n, uint64_t* out_pairs);
vdl_status vdl_largest_minor_divisor(uint64_t n, uint64_t* out_nu);
vdl_status vdl_non_divisors_up_to_nu(uint64_t n, vdl_u64_list** out);

/* ------------------------------------------------------------------ */
/* Searches                                                            */
/* ------------------------------------------------------------------ */

/* multiple_of == 0 disables the divisibility filter; max_range == 0 keeps
 * the default bound of 1e9 on hi - lo. */
vdl_status vdl_find_by_pair_count(uint64_t lo, uint64_t hi,
                                  uint64_t target_pairs, uint64_t multiple_of,
                                  uint64_t max_range, vdl_u64_list** out);

vdl_status vdl_highly_composite_up_to(uint64_t limit, vdl_u64_list** out);
vdl_status vdl_is_highly_composite(uint64_t n, int* out_is_member);

/* ------------------------------------------------------------------ */
/* sqrt(2) rationals                                                   */
/* ------------------------------------------------------------------ */

vdl_status vdl_sulba_sqrt2_partial(uint32_t terms, uint64_t* out_numerator,
                                   uint64_t* out_denominator);
vdl_status vdl_decimal_accuracy(uint64_t numerator, uint64_t denominator,
                                uint32_t* out_digits);
/* Writes -1 when the rational is below sqrt(2), +1 when above. */
vdl_status vdl_compare_to_sqrt2(uint64_t numerator, uint64_t denominator,
                                int* out_side);

/* ------------------------------------------------------------------ */
/* Claims                                                              */
/* ------------------------------------------------------------------ */

typedef struct vdl_claims vdl_claims;

vdl_status vdl_claims_builtin(vdl_claims** out);
/* Parses a claim-file JSON document (schema in the README). */
vdl_status vdl_claims_parse_json(const char* json_text, vdl_claims** out);
/* Concatenation of two registries (either may be NULL for empty). */
vdl_status vdl_claims_concat(const vdl_claims* first, const vdl_claims* second,
                             vdl_claims** out);
/* Registry holding just the claim with the given id. */
vdl_status vdl_claims_select(const vdl_claims* claims, const char* id,
                             vdl_claims** out);
size_t vdl_claims_count(const vdl_claims* claims);
const char* vdl_claims_id(const vdl_claims* claims, size_t index);
const char* vdl_claims_locus(const vdl_claims* claims, size_t index);
const char* vdl_claims_description(const vdl_claims* claims, size_t index);
void vdl_claims_free(vdl_claims* claims);

typedef enum vdl_verdict {
  VDL_VERDICT_PASS = 0,
  VDL_VERDICT_FAIL = 1,
  VDL_VERDICT_DISCREPANCY = 2
} vdl_verdict;

typedef enum vdl_check_outcome {
  VDL_OUTCOME_MATCH = 0,
  VDL_OUTCOME_MISMATCH = 1,
  VDL_OUTCOME_DISCREPANCY = 2,
  VDL_OUTCOME_INFO = 3
} vdl_check_outcome;

const char* vdl_verdict_name(vdl_verdict verdict);
const char* vdl_check_outcome_name(vdl_check_outcome outcome);

typedef struct vdl_verify_result vdl_verify_result;

/* Re-evaluates every claim in registry order. */
vdl_status vdl_verify_run(const vdl_claims* claims, vdl_verify_result** out);

size_t vdl_verify_count(const vdl_verify_result* r);
const char* vdl_verify_claim_id(const vdl_verify_result* r, size_t index);
vdl_verdict vdl_verify_verdict(const vdl_verify_result* r, size_t index);
double vdl_verify_elapsed_ms(const vdl_verify_result* r, size_t index);

/* Per-claim check detail rows. */
size_t vdl_verify_check_count(const vdl_verify_result* r, size_t claim_index);
const char* vdl_verify_check_kind(const vdl_verify_result* r,
                                  size_t claim_index, size_t check_index);
const char* vdl_verify_check_computed(const vdl_verify_result* r,
                                      size_t claim_index, size_t check_index);
const char* vdl_verify_check_expected(const vdl_verify_result* r,
                                      size_t claim_index, size_t check_index);
vdl_check_outcome vdl_verify_check_outcome(const vdl_verify_result* r,
                                           size_t claim_index,
                                           size_t check_index);

size_t vdl_verify_passed(const vdl_verify_result* r);
size_t vdl_verify_failed(const vdl_verify_result* r);
size_t vdl_verify_discrepancies(const vdl_verify_result* r);
void vdl_verify_result_free(vdl_verify_result* r);

#ifdef __cplusplus
}
#endif

#endif /* VDL_H */
