/*
 * togglelab C API.
 *
 * An exact-arithmetic laboratory for toggleability statistics on
 * diagram-defined posets: order-ideal lattices, rowmotion orbits, the
 * order-ideal and antichain toggleability spaces, their published bases and
 * the rook-statistic machinery.
 *
 * All functions return TGL_OK on success or a status code; a human-readable
 * message for the most recent failure on the calling thread is available via
 * tgl_last_error(). Strings returned through char** out-parameters are
 * malloc'd UTF-8 JSON and must be released with tgl_string_free(). Diagram
 * handles are opaque and freed with tgl_diagram_free().
 *
 * Handles remember how they were constructed (family instance, partition or
 * raw cells), so dimension reports carry the matching predicted value.
 */

#ifndef TOGGLELAB_H
#define TOGGLELAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tgl_diagram tgl_diagram;

typedef enum tgl_status {
  TGL_OK = 0,
  TGL_ERR_BAD_PARAMETER,
  TGL_ERR_EMPTY_DIAGRAM,
  TGL_ERR_BAD_CHARACTER,
  TGL_ERR_CAP_EXCEEDED,
  TGL_ERR_NOT_AN_IDEAL,
  TGL_ERR_NOT_AN_ANTICHAIN,
  TGL_ERR_NOT_A_DIAMOND,
  TGL_ERR_AMBIENT_MISMATCH,
  TGL_ERR_DEPENDENT_GENERATORS,
  TGL_ERR_NOT_IN_SPAN,
  TGL_ERR_CONDITIONS_FAIL,
  TGL_ERR_UNKNOWN_FAMILY,
  TGL_ERR_BAD_DIAGRAM,
  TGL_ERR_CELL_NOT_IN_DIAGRAM,
  TGL_ERR_PREDICATE_FAIL,
  TGL_ERR_PARSE,
  TGL_ERR_IO,
  TGL_ERR_INTERNAL,
} tgl_status;

const char* tgl_version(void);
const char* tgl_status_name(tgl_status status);

/* Message for the most recent failure on this thread ("" if none). */
const char* tgl_last_error(void);

void tgl_string_free(char* s);
void tgl_diagram_free(tgl_diagram* d);

/* Construction. Text format: '#' = cell, '.' = hole, row 1 = first line.
 * JSON format: {"cells": [[i,j], ...]} with 1-based integers.
 * Families: "rect" (uses m and n), "staircase", "typeA", "typeB" (use n). */
tgl_status tgl_diagram_from_text(const char* text, tgl_diagram** out);
tgl_status tgl_diagram_from_json(const char* json, tgl_diagram** out);
tgl_status tgl_diagram_from_family(const char* family, int m, int n,
                                   tgl_diagram** out);
tgl_status tgl_diagram_from_partition(const int* parts, int count,
                                      tgl_diagram** out);

int tgl_diagram_cell_count(const tgl_diagram* d);
tgl_status tgl_diagram_to_json(const tgl_diagram* d, char** out);
tgl_status tgl_diagram_to_text(const tgl_diagram* d, char** out);

/* Geometric predicates of the diagram, as a JSON object. */
tgl_status tgl_predicates_json(const tgl_diagram* d, char** out);

/* Poset export: {"elements": [[i,j], ...], "covers": [[a,b], ...]}. */
tgl_status tgl_poset_json(const tgl_diagram* d, char** out);

/* Dimension report: {"family", "params", "num_elements", "num_ideals",
 * "rank", "dim_IT", "dim_AT", "predicted", "pass"}; predicted/pass are null
 * when no prediction applies to the input. ideal_cap = 0 means the default. */
tgl_status tgl_dims_json(const tgl_diagram* d, uint64_t ideal_cap, char** out);

/* Rowmotion orbit report: {"orbit_sizes": [...], "num_ideals": N} plus full
 * cycles when include_cycles is nonzero. */
tgl_status tgl_orbits_json(const tgl_diagram* d, uint64_t ideal_cap,
                           int include_cycles, char** out);

/* Published bases of the order-ideal toggleability space for one family
 * instance. which: "B1", "B2" or "both". */
tgl_status tgl_basis_json(const char* family, int m, int n, const char* which,
                          int include_vectors, uint64_t ideal_cap, char** out);

/* Rook and reduced rook anchored at (row, col) of the diagram. */
tgl_status tgl_rook_json(const tgl_diagram* d, int row, int col,
                         uint64_t ideal_cap, char** out);

/* Verification suites: "main", "bases", "partitions", "rooks", "homomesy",
 * "determinant", "constraints", "all". max_n bounds family sweeps (0 =
 * suite default); trials and seed drive the random-diagram suite. */
tgl_status tgl_verify_json(const char* suite, int max_n, int trials,
                           uint64_t seed, uint64_t ideal_cap, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TOGGLELAB_H */
