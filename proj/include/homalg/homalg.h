#ifndef HOMALG_HOMALG_H
#define HOMALG_HOMALG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HOMALG_API __declspec(dllexport)
#else
#define HOMALG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct homalg_context homalg_context;
typedef struct homalg_weighted_graph homalg_weighted_graph;
typedef struct homalg_labeled_graph homalg_labeled_graph;

typedef enum homalg_status {
    HOMALG_OK = 0,
    HOMALG_NONISO = 1,
    HOMALG_ERR_MALFORMED = 2,
    HOMALG_ERR_BUDGET = 3,
    HOMALG_ERR_MISMATCH = 4,
    HOMALG_ERR_PRECONDITION = 5,
    HOMALG_ERR_INTERNAL = 6,
    HOMALG_ERR_NOT_FOUND = 7
} homalg_status;

typedef enum homalg_iso_mode {
    HOMALG_MODE_ORACLE = 0,
    HOMALG_MODE_CONSTRUCTIVE = 1,
    HOMALG_MODE_BOTH = 2
} homalg_iso_mode;

/* Contexts hold the operation budget and the last error message. */
HOMALG_API homalg_context* homalg_context_new(void);
HOMALG_API void homalg_context_free(homalg_context* ctx);
HOMALG_API void homalg_context_set_budget(homalg_context* ctx, uint64_t ops);
HOMALG_API uint64_t homalg_context_budget(const homalg_context* ctx);
/* Empty string when the last call succeeded. Owned by the context. */
HOMALG_API const char* homalg_last_error(const homalg_context* ctx);

/* Strings returned through char** out-parameters are freed with this. */
HOMALG_API void homalg_string_free(char* s);

HOMALG_API homalg_status homalg_weighted_graph_from_json(homalg_context* ctx, const char* json,
                                                         homalg_weighted_graph** out);
HOMALG_API homalg_status homalg_weighted_graph_to_json(homalg_context* ctx, const homalg_weighted_graph* h,
                                                       char** out);
HOMALG_API size_t homalg_weighted_graph_size(const homalg_weighted_graph* h);
HOMALG_API void homalg_weighted_graph_free(homalg_weighted_graph* h);

HOMALG_API homalg_status homalg_labeled_graph_from_json(homalg_context* ctx, const char* json,
                                                        homalg_labeled_graph** out);
HOMALG_API homalg_status homalg_labeled_graph_to_json(homalg_context* ctx, const homalg_labeled_graph* g,
                                                      char** out);
HOMALG_API size_t homalg_labeled_graph_label_count(const homalg_labeled_graph* g);
HOMALG_API void homalg_labeled_graph_free(homalg_labeled_graph* g);

/* Pinnings are arrays of 0-based vertex indices, one per label. */

/* {"value": "..."}; with pin == NULL the labels are ignored. */
HOMALG_API homalg_status homalg_hom(homalg_context* ctx, const homalg_labeled_graph* g,
                                    const homalg_weighted_graph* h, const size_t* pin, size_t pin_len,
                                    char** out_json);

HOMALG_API homalg_status homalg_contract(homalg_context* ctx, const homalg_weighted_graph* h,
                                         homalg_weighted_graph** out);

/* HOMALG_OK for iso, HOMALG_NONISO for noniso; the certificate is written either way. */
HOMALG_API homalg_status homalg_iso(homalg_context* ctx, const homalg_weighted_graph* a,
                                    const homalg_weighted_graph* b, const size_t* pin_a, const size_t* pin_b,
                                    size_t k, homalg_iso_mode mode, char** out_json);

/* HOMALG_ERR_NOT_FOUND (and a JSON note) when nothing separates within max_free unlabeled vertices. */
HOMALG_API homalg_status homalg_witness(homalg_context* ctx, const homalg_weighted_graph* a,
                                        const homalg_weighted_graph* b, const size_t* pin_a, const size_t* pin_b,
                                        size_t k, size_t max_free, char** out_json);

HOMALG_API homalg_status homalg_rank_report(homalg_context* ctx, const homalg_weighted_graph* h, size_t k,
                                            char** out_json);
HOMALG_API homalg_status homalg_orbits(homalg_context* ctx, const homalg_weighted_graph* h, size_t k,
                                       char** out_json);
HOMALG_API homalg_status homalg_counterexample(homalg_context* ctx, uint64_t p, size_t n, const size_t* ells,
                                               size_t ells_len, size_t k, char** out_json);

/* *passed is set to 1 when every check passed. */
HOMALG_API homalg_status homalg_selftest(homalg_context* ctx, uint64_t seed, int* passed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
