#ifndef ACTORKIT_H
#define ACTORKIT_H

/* C interface of libactorkit. Objects are opaque handles; results that are
   documents come back as JSON text owned by the caller (ak_string_free).
   Every function returns an ak_status; on failure ak_last_error() holds the
   message for the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AK_API __declspec(dllexport)
#else
#define AK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ak_status {
    AK_OK = 0,
    AK_ERR_INPUT = 1,
    AK_ERR_UNSUPPORTED = 2,
    AK_ERR_CAP = 3,
    AK_ERR_CONSTRUCTION = 4,
    AK_ERR_INTERNAL = 5
} ak_status;

typedef struct ak_algebra ak_algebra;
typedef struct ak_action ak_action;
typedef struct ak_actor ak_actor;
typedef struct ak_group ak_group;

typedef void (*ak_line_fn)(const char* line, void* user);

AK_API const char* ak_version(void);
AK_API const char* ak_last_error(void);
AK_API void ak_string_free(char* s);

/* algebras */
AK_API ak_status ak_algebra_from_json(const char* json, ak_algebra** out);
/* name: sl2, heisenberg, affine_line, leibniz_a5, upper_triangular, matrix<n>,
   truncated<n>, abelian<n>, ground_field; field: "Q" or a prime. */
AK_API ak_status ak_algebra_named(const char* name, const char* field, ak_algebra** out);
AK_API ak_status ak_algebra_to_json(const ak_algebra* a, char** out);
AK_API size_t ak_algebra_dim(const ak_algebra* a);
AK_API void ak_algebra_free(ak_algebra* a);

/* category may be NULL for the algebra's own tag */
AK_API ak_status ak_check(const ak_algebra* a, const char* category, char** report, int* passed);

/* actor constructions; kind is der, bim, bider, bider1, bider2 or mult */
AK_API ak_status ak_construct(const ak_algebra* a, const char* kind, ak_actor** out);
AK_API ak_status ak_actor_from_json(const char* json, ak_actor** out);
AK_API ak_status ak_actor_to_json(const ak_actor* x, char** out);
AK_API size_t ak_actor_dim(const ak_actor* x);
AK_API void ak_actor_free(ak_actor* x);

/* candidate may be NULL; it is only used for alternative algebras */
AK_API ak_status ak_actor_pipeline(const ak_algebra* a, int bider_variant, const ak_action* candidate, int with_actor,
                                   char** verdict, int* exists);
AK_API ak_status ak_xmod_check(const ak_algebra* a, const ak_actor* actor, char** report, int* passed);

/* actions */
AK_API ak_status ak_action_from_json(const char* json, ak_action** out);
AK_API ak_status ak_action_to_json(const ak_action* act, char** out);
AK_API void ak_action_free(ak_action* act);
AK_API ak_status ak_semidirect(const ak_action* act, ak_algebra** out);
/* category may be NULL for the target's tag */
AK_API ak_status ak_action_check(const ak_action* act, const char* category, char** report, int* passed);

/* Axiom-2 words; mode is plain, comm or anticomm. Empty or NULL words are zero. */
AK_API ak_status ak_words_coverage(const char* w1, const char* w2, const char* mode, char** report, int* passed);
/* mode may be NULL: comm for sign +1, anticomm for -1 */
AK_API ak_status ak_words_symmetry(const char* w2, int sign, const char* mode, char** report, int* passed);
/* outcome: 0 equal, 1 unequal-at-depth, 2 undetermined */
AK_API ak_status ak_words_cond4(const char* w1, const char* w2, int depth, const char* mode, char** result, int* outcome);
AK_API ak_status ak_words_validate(const ak_algebra* a, const char* w1, const char* w2, char** report, int* passed);

/* groups */
AK_API ak_status ak_group_from_json(const char* json, ak_group** out);
AK_API ak_status ak_group_named(const char* name, ak_group** out);
AK_API ak_status ak_group_to_json(const ak_group* g, char** out);
AK_API void ak_group_free(ak_group* g);
/* {"order", "perms", "group"} */
AK_API ak_status ak_group_aut(const ak_group* g, size_t order_cap, char** out);
/* {"order", "tau", "subgroup", "kernel"} */
AK_API ak_status ak_group_inn(const ak_group* g, size_t order_cap, char** out);
AK_API ak_status ak_group_holomorph(const ak_group* g, size_t order_cap, char** report, int* passed);
AK_API ak_status ak_group_universality(const ak_group* g, size_t max_b, char** report, int* passed);

/* Random corpus classification; field is "Q" or a prime. Lines arrive in
   index order, the summary last. */
AK_API ak_status ak_atlas(const char* field, size_t dim, const char* category, size_t samples, uint64_t seed,
                          unsigned jobs, int bider_variant, ak_line_fn emit, void* user);

/* Derived-action check against the semidirect identity suite on random
   actions; categories is a comma-separated list taken in turn. */
AK_API ak_status ak_crosscheck(const char* field, const char* categories, size_t max_dim, size_t samples, uint64_t seed,
                               char** report, int* passed);

/* Plain-text rendering of any report document. */
AK_API ak_status ak_render_text(const char* report_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
