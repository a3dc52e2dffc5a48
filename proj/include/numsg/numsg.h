/*
 * numsg: numerical semigroups, relative ideals and brick search.
 *
 * C interface over the C++ core. Objects are opaque handles owned by the
 * caller and released with the matching *_free function. Every fallible call
 * returns a numsg_status; on failure numsg_last_error() holds a message for
 * the calling thread. List getters follow the copy-out convention: they
 * return the full length and write at most `cap` values, so a call with
 * (NULL, 0) sizes the buffer. A NULL handle or out-pointer yields
 * NUMSG_ERR_NULL_POINTER; a NULL input array with a non-zero count yields
 * NUMSG_ERR_INVALID_ARGUMENT.
 */
#ifndef NUMSG_NUMSG_H
#define NUMSG_NUMSG_H

#include <stddef.h>
#include <stdint.h>

#if defined(NUMSG_BUILDING_LIBRARY)
#define NUMSG_API __attribute__((visibility("default")))
#else
#define NUMSG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum numsg_status {
  NUMSG_OK = 0,
  NUMSG_ERR_EMPTY_INPUT = 1,
  NUMSG_ERR_NON_COPRIME = 2,
  NUMSG_ERR_OVERFLOW = 3,
  NUMSG_ERR_PARENT_MISMATCH = 4,
  NUMSG_ERR_WRONG_ARITY = 5,
  NUMSG_ERR_NOT_UNITARY = 6,
  NUMSG_ERR_NOT_TWO_BY_TWO = 7,
  NUMSG_ERR_ZERO_NOT_GENERATOR = 8,
  NUMSG_ERR_INVALID_ARGUMENT = 9,
  NUMSG_ERR_IO = 10,
  NUMSG_ERR_NULL_POINTER = 11,
  NUMSG_ERR_INTERNAL = 12
} numsg_status;

NUMSG_API const char* numsg_status_name(numsg_status status);
NUMSG_API const char* numsg_last_error(void);

/* ---- semigroups -------------------------------------------------------- */

typedef struct numsg_semigroup numsg_semigroup;

NUMSG_API numsg_status numsg_semigroup_new(const int64_t* gens, size_t count,
                                           numsg_semigroup** out);
NUMSG_API void numsg_semigroup_free(numsg_semigroup* s);

NUMSG_API size_t numsg_semigroup_gens(const numsg_semigroup* s, int64_t* buf, size_t cap);
NUMSG_API size_t numsg_semigroup_apery(const numsg_semigroup* s, int64_t* buf, size_t cap);
NUMSG_API int64_t numsg_semigroup_multiplicity(const numsg_semigroup* s);
/* -1 for the semigroup of all non-negative integers */
NUMSG_API int64_t numsg_semigroup_frobenius(const numsg_semigroup* s);
NUMSG_API int64_t numsg_semigroup_n_count(const numsg_semigroup* s);
NUMSG_API int numsg_semigroup_is_symmetric(const numsg_semigroup* s);
NUMSG_API int numsg_semigroup_contains(const numsg_semigroup* s, int64_t x);

/* ---- relative ideals --------------------------------------------------- */

typedef struct numsg_ideal numsg_ideal;

typedef struct numsg_brick_info {
  size_t mu_ideal;
  size_t mu_dual;
  size_t mu_sum;
  int is_brick;
  int is_perfect;
} numsg_brick_info;

NUMSG_API numsg_status numsg_ideal_new(const numsg_semigroup* s, const int64_t* gens,
                                       size_t count, numsg_ideal** out);
NUMSG_API void numsg_ideal_free(numsg_ideal* ideal);
NUMSG_API size_t numsg_ideal_gens(const numsg_ideal* ideal, int64_t* buf, size_t cap);
NUMSG_API size_t numsg_ideal_mu(const numsg_ideal* ideal);

NUMSG_API numsg_status numsg_ideal_dual(const numsg_semigroup* s, const numsg_ideal* ideal,
                                        numsg_ideal** out);
NUMSG_API numsg_status numsg_ideal_add(const numsg_ideal* lhs, const numsg_ideal* rhs,
                                       numsg_ideal** out);
NUMSG_API numsg_status numsg_ideal_equals(const numsg_ideal* lhs, const numsg_ideal* rhs,
                                          int* out);
NUMSG_API numsg_status numsg_ideal_maximal(const numsg_semigroup* s, numsg_ideal** out);
NUMSG_API numsg_status numsg_brick_check(const numsg_semigroup* s, const numsg_ideal* ideal,
                                         numsg_brick_info* out);

/* ---- balanced quadruples ----------------------------------------------- */

typedef enum numsg_balance_kind {
  NUMSG_NOT_BALANCED = 0,
  NUMSG_BALANCED = 1,
  NUMSG_UNITARY = 2
} numsg_balance_kind;

typedef enum numsg_balance_failure {
  NUMSG_FAIL_NONE = 0,
  NUMSG_FAIL_NOT_ASCENDING = 1,
  NUMSG_FAIL_NOT_COPRIME = 2,
  NUMSG_FAIL_DIVISIBILITY = 3,
  NUMSG_FAIL_UNEQUAL_SUMS = 4,
  NUMSG_FAIL_NOT_MINIMAL = 5
} numsg_balance_failure;

typedef struct numsg_profile {
  int64_t a[4];
  int64_t d;
  int64_t e;
  int64_t q[4];
  int64_t common_sum;
  int64_t common_quotient;
  int64_t shift;
} numsg_profile;

typedef struct numsg_classification {
  numsg_balance_kind kind;
  numsg_balance_failure failure; /* NUMSG_FAIL_NONE unless NOT_BALANCED */
  numsg_profile profile;         /* zeroed when NOT_BALANCED */
} numsg_classification;

NUMSG_API const char* numsg_balance_kind_name(numsg_balance_kind kind);
NUMSG_API const char* numsg_balance_failure_name(numsg_balance_failure failure);

NUMSG_API numsg_status numsg_classify(const int64_t* values, size_t count,
                                      numsg_classification* out);
/* The profile functions re-derive the profile from profile->a. */
NUMSG_API numsg_status numsg_frobenius_t(const numsg_profile* profile, int64_t* out);
NUMSG_API numsg_status numsg_frobenius_s(const numsg_profile* profile, int64_t* out);
NUMSG_API numsg_status numsg_canonical_brick(const numsg_profile* profile,
                                             int64_t ideal[2], int64_t dual[2]);
NUMSG_API numsg_status numsg_unitary_family(int64_t z, int64_t out[4], int* found);

/* ---- lift -------------------------------------------------------------- */

/* quadruple receives a1, a1+n, a3, a3+n; lifted and lifted_ideal may be NULL. */
NUMSG_API numsg_status numsg_lift(const numsg_semigroup* s, const numsg_ideal* ideal,
                                  int64_t quadruple[4], numsg_semigroup** lifted,
                                  numsg_ideal** lifted_ideal, numsg_brick_info* check);

/* ---- search ------------------------------------------------------------ */

typedef struct numsg_search_config {
  int t_min;
  int t_max;
  int64_t gen_max;
  int mu_cap;       /* <= 0 selects floor(1 + t/2) */
  int perfect_only;
  unsigned workers; /* 0 selects the hardware concurrency */
} numsg_search_config;

typedef enum numsg_format { NUMSG_FORMAT_LINE = 0, NUMSG_FORMAT_TABLE = 1 } numsg_format;

typedef struct numsg_reports numsg_reports;

/* Borrowed view; pointers stay valid while the owning list lives. */
typedef struct numsg_report_view {
  const int64_t* s_gens;
  size_t s_count;
  const int64_t* i_gens;
  size_t i_count;
  const int64_t* dual_gens;
  size_t dual_count;
  int64_t k;
  int64_t m;
  int perfect;
  int64_t multiplicity;
  int64_t frobenius;
} numsg_report_view;

/* Return non-zero from a callback to stop the enumeration early. */
typedef int (*numsg_gens_callback)(const int64_t* gens, size_t count, void* user);

NUMSG_API void numsg_search_config_default(numsg_search_config* config);
NUMSG_API numsg_status numsg_enumerate_semigroups(const numsg_search_config* config,
                                                  numsg_gens_callback callback, void* user);
NUMSG_API numsg_status numsg_enumerate_ideals(const numsg_semigroup* s,
                                              const numsg_search_config* config,
                                              numsg_gens_callback callback, void* user);
NUMSG_API numsg_status numsg_search(const numsg_search_config* config, numsg_reports** out);

NUMSG_API size_t numsg_reports_count(const numsg_reports* reports);
NUMSG_API numsg_status numsg_reports_get(const numsg_reports* reports, size_t index,
                                         numsg_report_view* out);
NUMSG_API void numsg_reports_free(numsg_reports* reports);
/* path NULL writes records to stdout and the summary to stderr. */
NUMSG_API numsg_status numsg_reports_write(const numsg_reports* reports, const char* path,
                                           numsg_format format);
NUMSG_API numsg_status numsg_reports_write_summary(const numsg_reports* reports,
                                                   const char* path);
NUMSG_API numsg_status numsg_reports_read(const char* path, numsg_format format,
                                          numsg_reports** out);

#ifdef __cplusplus
}
#endif

#endif /* NUMSG_NUMSG_H */
