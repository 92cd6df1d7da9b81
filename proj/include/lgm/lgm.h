/* C interface to the lgm library.
 *
 * Objects are opaque handles released with their *_free function. Every
 * fallible call returns an lgm_status; on failure a message is available from
 * lgm_last_error() on the calling thread until the next call on that thread.
 * Strings returned through char** out-parameters are heap allocated and must
 * be released with lgm_string_free(). Results are JSON documents unless stated
 * otherwise; big integers and rationals appear as decimal strings.
 */
#ifndef LGM_LGM_H
#define LGM_LGM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LGM_API __declspec(dllexport)
#else
#define LGM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lgm_status {
  LGM_OK = 0,
  LGM_MISMATCH = 1, /* computation succeeded; a verification or identity check failed */
  LGM_ERR_PARSE = 2,
  LGM_ERR_INVALID_ARGUMENT = 3,
  LGM_ERR_NOT_LAURENT = 4,
  LGM_ERR_IO = 5,
  LGM_ERR_SCHEMA = 6,
  LGM_ERR_BUDGET = 7,
  LGM_ERR_INTERNAL = 8
} lgm_status;

typedef struct lgm_poly lgm_poly;
typedef struct lgm_corpus lgm_corpus;

LGM_API const char* lgm_version(void);
LGM_API const char* lgm_status_name(lgm_status status);
LGM_API const char* lgm_last_error(void);
LGM_API void lgm_string_free(char* s);

/* Laurent polynomials.
 * `variables` fixes the variable order; pass NULL to use the sorted set of
 * names occurring in `text`. */
LGM_API lgm_status lgm_poly_parse(const char* text, const char* const* variables, size_t nvars, lgm_poly** out);
LGM_API void lgm_poly_free(lgm_poly* poly);
LGM_API size_t lgm_poly_nvars(const lgm_poly* poly);
LGM_API size_t lgm_poly_term_count(const lgm_poly* poly);
/* Plain text rendering, terms in lexicographic exponent order. */
LGM_API lgm_status lgm_poly_render(const lgm_poly* poly, char** out);

/* Constant-term series to order `terms`: {"series": [...]}. */
LGM_API lgm_status lgm_poly_series(const lgm_poly* poly, size_t terms, char** out);
/* Newton polytope, origin-interior flag and, when defined, the dual polytope
 * with its normalized volume. */
LGM_API lgm_status lgm_poly_polytope(const lgm_poly* poly, char** out);
/* `degree` is a decimal string. */
LGM_API lgm_status lgm_poly_semiweak(const lgm_poly* poly, const char* degree, char** out);
/* Lattice counts of k-dilations, k = 0..kmax, of the dual polytope (dual != 0)
 * or of the Newton polytope. */
LGM_API lgm_status lgm_poly_ehrhart(const lgm_poly* poly, size_t kmax, int dual, char** out);
/* Annihilators of the series to order `terms`, solved from coefficients
 * 0..terms-holdout and checked on the rest. A negative order or degree
 * requests the grid sweep. */
LGM_API lgm_status lgm_poly_annihilator(const lgm_poly* poly, size_t terms, size_t holdout, int order, int degree,
                                        char** out);
/* Same for an explicit series given as a JSON array of integers. */
LGM_API lgm_status lgm_series_annihilator(const char* series_json, size_t terms, int order, int degree, char** out);

/* Corpus of weak Landau-Ginzburg models. */
LGM_API lgm_status lgm_corpus_builtin(lgm_corpus** out);
LGM_API lgm_status lgm_corpus_load(const char* path, lgm_corpus** out);
LGM_API void lgm_corpus_free(lgm_corpus* corpus);
LGM_API size_t lgm_corpus_size(const lgm_corpus* corpus);
LGM_API lgm_status lgm_corpus_list(const lgm_corpus* corpus, char** out);
LGM_API lgm_status lgm_corpus_entry(const lgm_corpus* corpus, int id, char** out);
LGM_API lgm_status lgm_corpus_entry_poly(const lgm_corpus* corpus, int id, lgm_poly** out);
/* Returns LGM_MISMATCH (with the report in *out) when a check fails. */
LGM_API lgm_status lgm_corpus_verify(const lgm_corpus* corpus, int id, size_t terms, char** out);
LGM_API lgm_status lgm_corpus_verify_all(const lgm_corpus* corpus, size_t terms, char** out);

/* Constructors. Polynomials come back as {"variables", "polynomial",
 * "terms"}; constraint systems as {"variables", "constraints", "potential"}. */
LGM_API lgm_status lgm_construct_toric(const int64_t* rays, size_t nrays, size_t dim, char** out);
LGM_API lgm_status lgm_construct_ci(int ambient_dim, const int* degrees, size_t ndegrees, char** out);
LGM_API lgm_status lgm_construct_grassmannian(int k, int n, char** out);
LGM_API lgm_status lgm_construct_grass_ci(int k, int n, int sections, char** out);
LGM_API lgm_status lgm_construct_weighted(const int* weights, size_t nweights, int degree, const int* partition,
                                          size_t npartition, char** out);

/* Elimination on a model document. `plan_json` is [[constraint, "var"], ...];
 * `bindings_json` (nullable) is {"name": "expr", ...}, substituted into the
 * resulting potential. */
LGM_API lgm_status lgm_eliminate(const char* model_json, const char* plan_json, const char* bindings_json,
                                 char** out);

/* Randomized identity test of two expressions; LGM_MISMATCH if they differ. */
LGM_API lgm_status lgm_identity(const char* lhs, const char* rhs, unsigned trials, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LGM_LGM_H */
