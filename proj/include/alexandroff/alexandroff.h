/*
 * C interface to the alexandroff library.
 *
 * Spaces are opaque handles owned by the caller and released with
 * alex_space_free. Functions returning text hand over a heap string released
 * with alex_string_free. Every fallible call returns an alex_status; on failure
 * the out-parameters are left untouched and alex_last_error() describes the
 * problem (per thread, valid until the next failing call on that thread).
 */
#ifndef ALEXANDROFF_H
#define ALEXANDROFF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ALEXANDROFF_BUILDING)
#    define ALEX_API __declspec(dllexport)
#  else
#    define ALEX_API __declspec(dllimport)
#  endif
#else
#  define ALEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct alex_space alex_space;

typedef enum alex_status {
  ALEX_OK = 0,
  ALEX_ERR_REFLEXIVITY_VIOLATION,
  ALEX_ERR_MINIMALITY_VIOLATION,
  ALEX_ERR_NOT_COVERED,
  ALEX_ERR_NO_MINIMAL_SET,
  ALEX_ERR_NOT_A_TOPOLOGY,
  ALEX_ERR_NOT_REFLEXIVE,
  ALEX_ERR_NOT_TRANSITIVE,
  ALEX_ERR_TOO_MANY_OPEN_SETS,
  ALEX_ERR_SIZE_OVERFLOW,
  ALEX_ERR_PARTITION_MISMATCH,
  ALEX_ERR_NOT_CONTINUOUS,
  ALEX_ERR_NOT_OPEN,
  ALEX_ERR_SEARCH_BUDGET_EXCEEDED,
  ALEX_ERR_INVALID_GLUE_DATA,
  ALEX_ERR_OVERLAP_MISMATCH,
  ALEX_ERR_NOT_WELL_DEFINED,
  ALEX_ERR_RESULT_NOT_HOMEOMORPHISM,
  ALEX_ERR_EMPTY_SPACE,
  ALEX_ERR_TOO_LARGE,
  ALEX_ERR_SYNTAX,
  ALEX_ERR_VALIDATION,
  ALEX_ERR_INVALID_ARGUMENT,
  ALEX_ERR_INTERNAL
} alex_status;

ALEX_API const char* alex_status_name(alex_status status);
ALEX_API const char* alex_last_error(void);
ALEX_API void alex_string_free(char* text);

/* Spaces and the text document format */

ALEX_API void alex_space_free(alex_space* space);
ALEX_API alex_status alex_space_parse(const char* text, alex_space** out);
ALEX_API alex_status alex_space_serialize(const alex_space* space, char** out);
/* membership is n*n bytes, row-major: membership[x*n + y] != 0 iff y is in S(x). */
ALEX_API alex_status alex_space_from_neighborhoods(size_t n, const unsigned char* membership,
                                                   alex_space** out);
ALEX_API size_t alex_space_size(const alex_space* space);
ALEX_API const char* alex_space_name(const alex_space* space);
ALEX_API alex_status alex_space_set_name(alex_space* space, const char* name);
/* 1 iff y is in S(x); 0 otherwise or when an id is out of range. */
ALEX_API int alex_space_in_neighborhood(const alex_space* space, size_t x, size_t y);
ALEX_API alex_status alex_space_to_dot(const alex_space* space, char** out);

/* Constructions. Point and class lists use labels: "a,b" and "a,b|c|d,e". */

ALEX_API alex_status alex_product(const alex_space* a, const alex_space* b, alex_space** out);
ALEX_API alex_status alex_disjoint_sum(const alex_space* a, const alex_space* b, alex_space** out);
ALEX_API alex_status alex_subspace(const alex_space* space, const char* points, alex_space** out);
ALEX_API alex_status alex_quotient(const alex_space* space, const char* classes, alex_space** out);
ALEX_API alex_status alex_t0_quotient(const alex_space* space, alex_space** out);

/* Invariants */

typedef struct alex_invariants {
  size_t points;
  size_t distinct_neighborhoods;
  size_t min;
  size_t index;
  int discrete;
  int hausdorff;
  int t0;
} alex_invariants;

ALEX_API alex_status alex_invariants_compute(const alex_space* space, alex_invariants* out);
ALEX_API alex_status alex_report_text(const alex_space* space, char** out);
ALEX_API alex_status alex_is_basic(const alex_space* space, size_t x, int* out);
ALEX_API alex_status alex_is_irreducible(const alex_space* space, size_t x, int* out);

/* Maps. A map is written "a:x,b:y,..." with source and target labels. */

ALEX_API alex_status alex_map_check(const alex_space* source, const alex_space* target, const char* map,
                                    int* continuous, int* open);
/* On success *out is the image subspace, renamed after the target. */
ALEX_API alex_status alex_image_space(const alex_space* source, const alex_space* target, const char* map,
                                      alex_space** out);
/* *out_map is NULL when the spaces are not homeomorphic. max_points 0 selects
 * the default guard of 10 points. */
ALEX_API alex_status alex_find_homeomorphism(const alex_space* a, const alex_space* b, size_t max_points,
                                             char** out_map);
/* glue_text holds "piece XREP YREP: p=q ..." records. */
ALEX_API alex_status alex_glue(const alex_space* x, const alex_space* y, const char* glue_text, char** out_map);

/* Generators */

typedef enum alex_gen_kind {
  ALEX_GEN_CHAIN,
  ALEX_GEN_BLOCKS,
  ALEX_GEN_DIVISOR,
  ALEX_GEN_DISCRETE,
  ALEX_GEN_INDISCRETE,
  ALEX_GEN_RANDOM
} alex_gen_kind;

typedef struct alex_gen_spec {
  alex_gen_kind kind;
  size_t size;       /* chain length, block count, divisor bound, or point count */
  size_t block_size; /* blocks */
  int with_top;      /* divisor */
  uint64_t seed;     /* random */
  uint64_t density_num, density_den; /* random; probability num/den */
} alex_gen_spec;

ALEX_API alex_status alex_generate(const alex_gen_spec* spec, alex_space** out);

/* Census of all spaces on n <= 5 labeled points. */

ALEX_API alex_status alex_census_counts(size_t n, size_t* labeled, size_t* classes);
ALEX_API alex_status alex_census_text(size_t n, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ALEXANDROFF_H */
