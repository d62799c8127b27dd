/*
 * orthomon — exact arithmetic for the two-parameter family of bisimple
 * monogenic orthodox semigroups O_(nu,mu)(a,b).
 *
 * C interface over the C++ core: opaque handles, status codes, and
 * malloc-style ownership. Every function that can fail returns an
 * ortho_status; on failure, out-parameters are left untouched and
 * ortho_last_error() carries a thread-local message. Strings returned
 * through char** are heap-allocated and released with ortho_string_free().
 */

#ifndef ORTHOMON_ORTHOMON_H_
#define ORTHOMON_ORTHOMON_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* The parameter value "infinity". */
#define ORTHO_INF UINT32_MAX

typedef enum ortho_status {
  ORTHO_OK = 0,
  ORTHO_ERR_DOMAIN = 1,
  ORTHO_ERR_PARSE = 2,
  ORTHO_ERR_SHAPE = 3,
  ORTHO_ERR_BOUND = 4,
  ORTHO_ERR_NON_IDEMPOTENT = 5,
  ORTHO_ERR_PRECONDITION = 6,
  ORTHO_ERR_LENGTH = 7,
  ORTHO_ERR_OVERFLOW = 8,
  ORTHO_ERR_UNDECIDED = 9,
  ORTHO_ERR_IO = 10,
  ORTHO_ERR_ARGUMENT = 11
} ortho_status;

typedef enum ortho_word_type {
  ORTHO_TYPE_I = 0,
  ORTHO_TYPE_II_PROPER = 1,
  ORTHO_TYPE_II_IMPROPER = 2,
  ORTHO_TYPE_III = 3
} ortho_word_type;

typedef struct ortho_params ortho_params;
typedef struct ortho_word ortho_word;
typedef struct ortho_word_list ortho_word_list;
typedef struct ortho_oracle ortho_oracle;

const char* ortho_version(void);
const char* ortho_status_name(ortho_status status);
/* Message for the most recent failure on this thread ("" if none). */
const char* ortho_last_error(void);
void ortho_string_free(char* s);

/* ---- parameters ------------------------------------------------------- */

/* nu, mu >= 1 or ORTHO_INF. */
ortho_status ortho_params_new(uint32_t nu, uint32_t mu, ortho_params** out);
void ortho_params_free(ortho_params* p);
uint32_t ortho_params_nu(const ortho_params* p);
uint32_t ortho_params_mu(const ortho_params* p);

/* ---- elements --------------------------------------------------------- */

/* Parses caret notation ((a|b)(^k)?)+ and normalizes to the reduced form. */
ortho_status ortho_word_parse(const ortho_params* p, const char* text,
                              ortho_word** out);
ortho_status ortho_word_from_quadruple(const ortho_params* p, uint64_t i,
                                       uint64_t m, uint64_t n, uint64_t j,
                                       ortho_word** out);
void ortho_word_free(ortho_word* w);

void ortho_word_quadruple(const ortho_word* w, uint64_t out[4]);
ortho_word_type ortho_word_get_type(const ortho_word* w);
int ortho_word_equal(const ortho_word* x, const ortho_word* y);
ortho_status ortho_word_display(const ortho_word* w, char** out);
/* Element JSON: {"i","m","n","j","type","display"} with type "II*" marking
 * the improper word. */
ortho_status ortho_word_json(const ortho_word* w, char** out);

/* ---- arithmetic ------------------------------------------------------- */

ortho_status ortho_mul(const ortho_params* p, const ortho_word* x,
                       const ortho_word* y, ortho_word** out);
ortho_status ortho_pow(const ortho_params* p, const ortho_word* x, uint64_t k,
                       ortho_word** out);
ortho_status ortho_is_idempotent(const ortho_params* p, const ortho_word* x,
                                 int* out);
/* e <= f in the natural order; both must be idempotent. */
ortho_status ortho_natural_le(const ortho_params* p, const ortho_word* e,
                              const ortho_word* f, int* out);
ortho_status ortho_is_inverse_pair(const ortho_params* p, const ortho_word* x,
                                   const ortho_word* y, int* out);
/* 1 when the order is finite (idempotent), 0 when infinite. */
ortho_status ortho_order_is_finite(const ortho_params* p, const ortho_word* x,
                                   int* out);

/* ---- Green's relations ------------------------------------------------ */

/* rel is one of 'R', 'L', 'H', 'D'. */
ortho_status ortho_green_related(const ortho_params* p, const ortho_word* x,
                                 const ortho_word* y, char rel, int* out);
/* Key names such as "R_ab" / "row(0,2)" and "L_ab" / "col(2,1)". */
ortho_status ortho_green_keys(const ortho_word* x, char** rkey, char** lkey);

/* ---- element lists ---------------------------------------------------- */

size_t ortho_word_list_size(const ortho_word_list* list);
/* Borrowed reference, valid while the list lives. */
const ortho_word* ortho_word_list_get(const ortho_word_list* list, size_t k);
void ortho_word_list_free(ortho_word_list* list);

ortho_status ortho_inverses_within(const ortho_params* p, const ortho_word* x,
                                   uint64_t cap, ortho_word_list** out);
ortho_status ortho_closure(const ortho_params* p,
                           const ortho_word* const* gens, size_t ngens,
                           uint64_t cap, ortho_word_list** out,
                           int* complete);

/* ---- structure -------------------------------------------------------- */

ortho_status ortho_bicyclic_presentation(const ortho_params* p,
                                         const ortho_word* q,
                                         const ortho_word* r, int* out);
/* found=1 and (m,n) with r^m q^n = x when a pair exists with m+n <= cap. */
ortho_status ortho_bicyclic_coords(const ortho_params* p, const ortho_word* x,
                                   const ortho_word* q, const ortho_word* r,
                                   uint64_t cap, int* found, uint64_t* m,
                                   uint64_t* n);
/* Bitmask over ortho_piece_name indices 0..5. */
ortho_status ortho_pieces(const ortho_params* p, const ortho_word* x,
                          uint64_t cap, uint32_t* mask);
const char* ortho_piece_name(unsigned index);

/* tag receives one of "RECT4", "RIGHT2", "LEFT2", "SINGLETON" (static). */
ortho_status ortho_idempotent_dclass(const ortho_params* p,
                                     const ortho_word* e,
                                     ortho_word_list** members,
                                     const char** tag);

/* JSON reports; ok=1 when the report carries no violations. */
ortho_status ortho_check_lemma210(const ortho_params* p, uint64_t window,
                                  char** report, int* ok);
ortho_status ortho_check_intersections(const ortho_params* p, uint64_t window,
                                       char** report, int* ok);

/* ---- renderers -------------------------------------------------------- */

ortho_status ortho_eggbox_tsv(const ortho_params* p, uint64_t rows,
                              uint64_t cols, char** out);
ortho_status ortho_eggbox_ascii(const ortho_params* p, uint64_t rows,
                                uint64_t cols, char** out);
ortho_status ortho_band_dot(const ortho_params* p, uint64_t depth, char** out);

/* ---- congruence oracle ------------------------------------------------ */

/* Builds (or loads from cache_dir unless rebuild) the bounded congruence
 * table at length bound L (4..16). cache_dir may be NULL for no caching. */
ortho_status ortho_oracle_build(const ortho_params* p, uint32_t L,
                                int with_idempotents, const char* cache_dir,
                                int rebuild, ortho_oracle** out);
void ortho_oracle_free(ortho_oracle* oracle);
/* answer: 1 = YES, 0 = NO_OR_UNKNOWN, -1 = hard NO (only with
 * assume_complete and off-boundary classes). */
ortho_status ortho_oracle_equal(const ortho_oracle* oracle, const char* w1,
                                const char* w2, int assume_complete,
                                int* answer);
ortho_status ortho_oracle_stats_json(const ortho_oracle* oracle, char** out);
/* Soundness + reachability sweep up to len_bound (<= L - 4). */
ortho_status ortho_oracle_cross_check(const ortho_oracle* oracle,
                                      uint32_t len_bound, char** report,
                                      int* sound);

/* ---- verification suites ---------------------------------------------- */

/* One JSON document per line in *report. suite "all" runs every suite for
 * the given parameters. ok=1 when every executed suite passed. */
ortho_status ortho_verify(const ortho_params* p, const char* suite,
                          uint64_t seed, char** report, int* ok);
/* Every suite across the standard parameter matrix. */
ortho_status ortho_verify_matrix(uint64_t seed, char** report, int* ok);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ORTHOMON_ORTHOMON_H_ */
