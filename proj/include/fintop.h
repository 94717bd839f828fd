/* C interface to the fintop library: finite topological spaces, continuous
 * maps, Hausdorff reflection and epimorphism checks.
 *
 * All objects are opaque handles created by the library and released with the
 * matching *_free function. Functions report fintop_status; on failure,
 * fintop_last_error() describes the problem for the calling thread. Strings
 * returned through out parameters are released with fintop_string_free.
 * Point sets travel as bit masks over the carrier {0..points-1}.
 */
#ifndef FINTOP_H
#define FINTOP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fintop_space fintop_space;
typedef struct fintop_map fintop_map;

typedef enum fintop_status {
    FINTOP_OK = 0,
    FINTOP_ERR_INVALID_ARGUMENT = 1,
    FINTOP_ERR_PARSE = 2,
    FINTOP_ERR_TOPOLOGY = 3,
    FINTOP_ERR_RANGE = 4,
    FINTOP_ERR_NOT_CONTINUOUS = 5,
    FINTOP_ERR_MISMATCH = 6,
    FINTOP_ERR_NOT_HAUSDORFF = 7,
    FINTOP_ERR_COLLAPSE = 8,
    FINTOP_ERR_LIMIT = 9,
    FINTOP_ERR_INTERNAL = 10
} fintop_status;

typedef enum fintop_strategy {
    FINTOP_STRATEGY_COMPONENTS = 0,
    FINTOP_STRATEGY_CLOPEN = 1,
    FINTOP_STRATEGY_MAPS_ORACLE = 2
} fintop_strategy;

typedef enum fintop_category {
    FINTOP_CATEGORY_HAUS = 0,
    FINTOP_CATEGORY_TOP = 1
} fintop_category;

typedef enum fintop_fault {
    FINTOP_FAULT_NONE = 0,
    FINTOP_FAULT_BAD_REFLECTION = 1
} fintop_fault;

/* Message for the calling thread's most recent failure; never NULL. */
const char* fintop_last_error(void);
const char* fintop_status_name(fintop_status status);

void fintop_string_free(char* s);
void fintop_space_free(fintop_space* s);
void fintop_map_free(fintop_map* m);

/* Spaces. fintop_space_make validates the open family and stores it in
 * canonical form; the JSON functions speak the documented space documents. */
fintop_status fintop_space_make(int points, const uint32_t* opens, size_t count,
                                fintop_space** out);
fintop_status fintop_space_from_json(const char* text, fintop_space** out);
fintop_status fintop_space_to_json(const fintop_space* s, char** out);
int fintop_space_points(const fintop_space* s);
size_t fintop_space_open_count(const fintop_space* s);
fintop_status fintop_space_open_at(const fintop_space* s, size_t index, uint32_t* out);
int fintop_space_equal(const fintop_space* a, const fintop_space* b);

/* Generators. */
fintop_status fintop_space_discrete(int points, fintop_space** out);
fintop_status fintop_space_indiscrete(int points, fintop_space** out);
fintop_status fintop_space_sierpinski(fintop_space** out);
fintop_status fintop_space_pseudo_circle(fintop_space** out);
fintop_status fintop_space_disjoint_union(const fintop_space* a, const fintop_space* b,
                                          fintop_space** out);

/* Point-set operators. */
fintop_status fintop_closure(const fintop_space* s, uint32_t set, uint32_t* out);
fintop_status fintop_interior(const fintop_space* s, uint32_t set, uint32_t* out);
fintop_status fintop_is_dense(const fintop_space* s, uint32_t set, int* out);
fintop_status fintop_is_hausdorff(const fintop_space* s, int* out);
fintop_status fintop_separation_axioms(const fintop_space* s, int* t0, int* t1, int* t2);
/* found is 0 when no disjoint open pair separates x from y. */
fintop_status fintop_separation_witness(const fintop_space* s, int x, int y, int* found,
                                        uint32_t* o1, uint32_t* o2);

/* Maps. */
fintop_status fintop_map_make(const fintop_space* dom, const fintop_space* cod,
                              const int* assignment, size_t count, fintop_map** out);
fintop_status fintop_map_from_json(const char* text, fintop_map** out);
fintop_status fintop_map_to_json(const fintop_map* m, char** out);
int fintop_map_dom_points(const fintop_map* m);
int fintop_map_cod_points(const fintop_map* m);
fintop_status fintop_map_value(const fintop_map* m, int point, int* out);
fintop_status fintop_map_dom(const fintop_map* m, fintop_space** out);
fintop_status fintop_map_cod(const fintop_map* m, fintop_space** out);
int fintop_map_equal(const fintop_map* a, const fintop_map* b);

/* Hausdorff reflection. Either out parameter may be NULL. */
fintop_status fintop_reflect(const fintop_space* s, fintop_strategy strategy,
                             fintop_space** out_space, fintop_map** out_projection);
/* Factors f through the reflection of its domain. out_projection may be NULL. */
fintop_status fintop_factor(const fintop_map* f, fintop_map** out_factored,
                            fintop_map** out_projection);

/* Epimorphism checks. Cospan out parameters may be NULL; they are set only
 * when a counterexample exists. */
fintop_status fintop_epi_dense(const fintop_map* f, int* is_epi);
fintop_status fintop_epi_bruteforce(const fintop_map* f, fintop_category category, int bound,
                                    int* is_epi, int* bound_warning, fintop_map** out_g,
                                    fintop_map** out_h);
fintop_status fintop_non_epi_witness(const fintop_map* f, int* found, fintop_map** out_g,
                                     fintop_map** out_h);

/* All labeled topologies on the given carrier, canonical order; up to 5
 * points. Free the array with fintop_space_array_free. */
fintop_status fintop_enumerate_topologies(int points, int up_to_homeo, fintop_space*** out,
                                          size_t* count);
void fintop_space_array_free(fintop_space** spaces, size_t count);

/* Self-check suite; report is text or JSON. passed is 1 only when every
 * property holds. */
fintop_status fintop_run_suite(int max_n, fintop_fault fault, int as_json, char** out_report,
                               int* passed);

#ifdef __cplusplus
}
#endif

#endif /* FINTOP_H */
