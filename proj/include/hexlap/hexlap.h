#ifndef HEXLAP_H
#define HEXLAP_H

/*
 * C interface to hexlap: k-hexagonal iterated graphs, their normalized
 * Laplacian spectra, and the invariants derived from them.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a hexlap_status;
 * on failure hexlap_last_error() holds a message for the calling thread.
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with hexlap_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#ifdef _WIN32
#  ifdef HEXLAP_BUILDING_DLL
#    define HEXLAP_API __declspec(dllexport)
#  else
#    define HEXLAP_API __declspec(dllimport)
#  endif
#else
#  define HEXLAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hexlap_status {
    HEXLAP_OK = 0,
    HEXLAP_ERR_INVALID_ARGUMENT = 1, /* bad parameter, null pointer, unknown enum */
    HEXLAP_ERR_PARSE = 2,            /* malformed edge-list text */
    HEXLAP_ERR_GRAPH = 3,            /* loop, duplicate, out-of-range index, disconnected, edgeless */
    HEXLAP_ERR_BUDGET = 4,           /* construction would exceed the vertex budget */
    HEXLAP_ERR_NUMERICAL = 5,        /* solver failure or inconsistent spectrum */
    HEXLAP_ERR_DOMAIN = 6,           /* closed form evaluated outside its domain */
    HEXLAP_ERR_INTERNAL = 7
} hexlap_status;

typedef enum hexlap_graph_kind {
    HEXLAP_GRAPH_CYCLE = 0,
    HEXLAP_GRAPH_PATH = 1,
    HEXLAP_GRAPH_COMPLETE = 2
} hexlap_graph_kind;

typedef enum hexlap_spectrum_method {
    HEXLAP_SPECTRUM_ORACLE = 0,   /* build H^k_n(G) and diagonalize */
    HEXLAP_SPECTRUM_ITERATIVE = 1 /* recursion from the spectrum of G */
} hexlap_spectrum_method;

typedef enum hexlap_invariant_method {
    HEXLAP_INVARIANTS_CLOSED = 0,
    HEXLAP_INVARIANTS_SPECTRUM = 1,
    HEXLAP_INVARIANTS_ORACLE = 2
} hexlap_invariant_method;

typedef enum hexlap_validation_mode {
    HEXLAP_VALIDATE_TABLES = 0,
    HEXLAP_VALIDATE_ORACLE = 1
} hexlap_validation_mode;

typedef struct hexlap_graph hexlap_graph;
typedef struct hexlap_spectrum hexlap_spectrum;
typedef struct hexlap_invariants hexlap_invariants;
typedef struct hexlap_validation hexlap_validation;

typedef struct hexlap_spectrum_entry {
    double value;
    uint64_t multiplicity;
    const char* family; /* static string, or NULL when untagged */
} hexlap_spectrum_entry;

HEXLAP_API const char* hexlap_version(void);
HEXLAP_API const char* hexlap_last_error(void);
HEXLAP_API const char* hexlap_status_string(hexlap_status status);
HEXLAP_API void hexlap_string_free(char* s);

/* Budget from HEXLAP_VERTEX_BUDGET, else 1000000. */
HEXLAP_API hexlap_status hexlap_default_vertex_budget(uint64_t* out);

/* ---- graphs ---- */
HEXLAP_API hexlap_status hexlap_graph_create(size_t num_vertices, const uint32_t* endpoints, size_t num_edges,
                                             hexlap_graph** out);
HEXLAP_API hexlap_status hexlap_graph_generate(hexlap_graph_kind kind, size_t m, hexlap_graph** out);
HEXLAP_API hexlap_status hexlap_graph_parse(const char* text, hexlap_graph** out);
HEXLAP_API hexlap_status hexlap_graph_serialize(const hexlap_graph* g, char** out);
HEXLAP_API void hexlap_graph_free(hexlap_graph* g);

HEXLAP_API size_t hexlap_graph_num_vertices(const hexlap_graph* g);
HEXLAP_API size_t hexlap_graph_num_edges(const hexlap_graph* g);
HEXLAP_API int hexlap_graph_is_connected(const hexlap_graph* g);
HEXLAP_API int hexlap_graph_is_bipartite(const hexlap_graph* g);

/* H^k_n(G). budget == 0 selects hexlap_default_vertex_budget(). */
HEXLAP_API hexlap_status hexlap_graph_transform(const hexlap_graph* g, unsigned k, unsigned n, uint64_t budget,
                                                hexlap_graph** out);

/* ---- spectra ---- */
HEXLAP_API hexlap_status hexlap_spectrum_compute(const hexlap_graph* g, unsigned k, unsigned n,
                                                 hexlap_spectrum_method method, uint64_t budget,
                                                 hexlap_spectrum** out);
HEXLAP_API void hexlap_spectrum_free(hexlap_spectrum* s);
HEXLAP_API size_t hexlap_spectrum_num_entries(const hexlap_spectrum* s);
HEXLAP_API uint64_t hexlap_spectrum_total_dim(const hexlap_spectrum* s);
HEXLAP_API hexlap_status hexlap_spectrum_entry_at(const hexlap_spectrum* s, size_t index,
                                                  hexlap_spectrum_entry* out);
HEXLAP_API hexlap_status hexlap_spectrum_to_json(const hexlap_spectrum* s, char** out);
HEXLAP_API hexlap_status hexlap_spectrum_to_text(const hexlap_spectrum* s, char** out);

/* ---- invariants ---- */
HEXLAP_API hexlap_status hexlap_invariants_compute(const hexlap_graph* g, unsigned k, unsigned n,
                                                   hexlap_invariant_method method, uint64_t budget,
                                                   hexlap_invariants** out);
HEXLAP_API void hexlap_invariants_free(hexlap_invariants* r);
HEXLAP_API double hexlap_invariants_kemeny(const hexlap_invariants* r);
HEXLAP_API double hexlap_invariants_kirchhoff(const hexlap_invariants* r);
HEXLAP_API double hexlap_invariants_tau_log10(const hexlap_invariants* r);
/* Decimal tau, or NULL when only log10 is known. Owned by the handle. */
HEXLAP_API const char* hexlap_invariants_tau_exact(const hexlap_invariants* r);
HEXLAP_API hexlap_status hexlap_invariants_to_json(const hexlap_invariants* r, char** out);
HEXLAP_API hexlap_status hexlap_invariants_to_text(const hexlap_invariants* r, char** out);

/* ---- validation ---- */
HEXLAP_API hexlap_status hexlap_validate(hexlap_validation_mode mode, hexlap_validation** out);
HEXLAP_API void hexlap_validation_free(hexlap_validation* v);
/* 1 when no unexplained mismatch was found. */
HEXLAP_API int hexlap_validation_ok(const hexlap_validation* v);
HEXLAP_API size_t hexlap_validation_count(const hexlap_validation* v, const char* status);
HEXLAP_API hexlap_status hexlap_validation_to_json(const hexlap_validation* v, char** out);
HEXLAP_API hexlap_status hexlap_validation_to_text(const hexlap_validation* v, char** out);

/* ---- scalar helpers ---- */
HEXLAP_API hexlap_status hexlap_cubic_roots(double sigma, double out_roots[3]);
HEXLAP_API hexlap_status hexlap_quintic_roots(double sigma, unsigned k, double out_roots[5]);
/* Exact decimal spanning-tree count of H^k_n(G) from the closed forms. */
HEXLAP_API hexlap_status hexlap_tau_closed(const char* tau0_decimal, uint64_t n0, uint64_t e0, unsigned k,
                                           unsigned n, char** out);
/* Exact Matrix-Tree spanning-tree count, decimal. */
HEXLAP_API hexlap_status hexlap_spanning_trees(const hexlap_graph* g, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HEXLAP_H */
