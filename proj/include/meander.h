#ifndef MEANDER_H
#define MEANDER_H

/* C interface of libmeander: crossing sequences of open meanders, their
 * disk structure, prime decomposition, censuses, and counting tables.
 * Every function returns a meander_status; outputs are written through
 * pointers. Strings returned through char** are heap copies released with
 * meander_string_destroy. On failure meander_last_error() describes the
 * reason for the calling thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum meander_status {
    MEANDER_OK = 0,
    MEANDER_EINVAL = 1,       /* malformed argument (not a permutation, bad bounds) */
    MEANDER_ENOTMEANDER = 2,  /* permutation whose arc system self-intersects */
    MEANDER_ENOTDISK = 3,     /* value range is not a disk class here */
    MEANDER_EPARITY = 4,      /* insertion order does not match the site parity */
    MEANDER_ERANGE = 5,       /* order outside the supported range */
    MEANDER_EIO = 6,          /* file system failure */
    MEANDER_EDATA = 7         /* internal invariant violated; indicates a bug */
} meander_status;

const char* meander_status_name(meander_status s);

/* message for the most recent failing call on this thread; never NULL */
const char* meander_last_error(void);

void meander_string_destroy(char* s);

/* ---- crossing sequences ------------------------------------------------ */

typedef struct meander_perm meander_perm;

/* validates and copies; rejects non-permutations and non-meanders */
meander_status meander_perm_create(const int* values, int n, meander_perm** out);
void meander_perm_destroy(meander_perm* p);
int meander_perm_order(const meander_perm* p);
const int* meander_perm_values(const meander_perm* p);

/* validity test without allocation */
meander_status meander_check(const int* values, int n);

meander_status meander_reverse_complement(const meander_perm* p, meander_perm** out);

/* restriction of the disk [lo..hi] read as a standalone meander */
meander_status meander_pattern(const meander_perm* p, int lo, int hi, meander_perm** out);

/* collapse the disk [lo..hi] to a point or cup */
meander_status meander_cut(const meander_perm* p, int lo, int hi, meander_perm** out);

/* replace the elementary disk [lo..hi] of host by guest */
meander_status meander_insert(const meander_perm* host, int lo, int hi,
                              const meander_perm* guest, meander_perm** out);

/* Arc systems: pairs flattened as a0,b0,a1,b1,... Arrays need room for n
 * ints each (there are at most n/2 pairs per side). */
meander_status meander_arches(const meander_perm* p, int* lower, int* lower_pairs,
                              int* upper, int* upper_pairs, int* start_label,
                              int* finish_label, int* finish_below);

/* ---- enumeration ------------------------------------------------------- */

#define MEANDER_MAX_ENUMERABLE 20
#define MEANDER_MAX_CENSUS 14
#define MEANDER_MAX_TABLE 14
#define MEANDER_MAX_ITERATED 36

/* return nonzero to continue, zero to stop early */
typedef int (*meander_visit_fn)(const int* seq, int n, void* ctx);

/* Visits every meander of order n in lexicographic order independent of
 * the thread count (threads <= 0 uses the hardware count). visit may be
 * NULL to only count. */
meander_status meander_enumerate(int n, int threads, meander_visit_fn visit, void* ctx,
                                 uint64_t* count);

/* ---- disk structure and classification --------------------------------- */

/* disk classes of width >= min_width as lo,hi pairs, sorted by (width, lo);
 * capacity counts pairs; required capacity is reported in *count even when
 * it exceeds capacity (excess classes are dropped) */
meander_status meander_disk_classes(const meander_perm* p, int min_width, int* lo_hi,
                                    int capacity, int* count);

/* articulation classes of the decomposition graph, width strictly between
 * 2 and n, sorted by (lo, hi) */
meander_status meander_articulations(const meander_perm* p, int* lo_hi, int capacity,
                                     int* count);

meander_status meander_graph_counts(const meander_perm* p, int* verts, int* edges);
meander_status meander_graph_dot(const meander_perm* p, char** out);

typedef enum meander_kind {
    MEANDER_IRREDUCIBLE = 0,
    MEANDER_SNAKE = 1,
    MEANDER_COMPOSITE = 2
} meander_kind;

/* inverse is meaningful for snakes only (reversal = 1, identity = 0) */
meander_status meander_classify(const meander_perm* p, meander_kind* kind, int* inverse);

/* root color of the construction tree: 1 black, 0 white */
meander_status meander_root_black(const meander_perm* p, int* black);

/* construction tree as {"color":...,"ord":...,"children":[...]} */
meander_status meander_decompose_json(const meander_perm* p, char** out);

/* ---- serialization ----------------------------------------------------- */

meander_status meander_jsonl(const meander_perm* p, char** out);
meander_status meander_svg(const meander_perm* p, char** out);

/* ---- censuses ---------------------------------------------------------- */

typedef struct meander_census {
    int n;
    uint64_t total;
    uint64_t irreducible;
    uint64_t snake;
    uint64_t composite;
    uint64_t black_started; /* filled when with_roots is set */
    uint64_t white_started;
    uint64_t cups_hist[MEANDER_MAX_ENUMERABLE / 2 + 1];    /* by cup count */
    uint64_t irr_by_cups[MEANDER_MAX_ENUMERABLE / 2 + 1];
} meander_census;

/* full sweep over order n (n <= MEANDER_MAX_CENSUS); with_roots adds the
 * per-meander decomposition pass feeding the root color split */
meander_status meander_census_run(int n, int threads, int with_roots, meander_census* out);

/* ---- counting tables --------------------------------------------------- */

typedef struct meander_tables meander_tables;

/* columns of the main table */
#define MEANDER_COL_M 0
#define MEANDER_COL_BLACK 1
#define MEANDER_COL_WHITE 2
#define MEANDER_COL_IRR 3
#define MEANDER_COL_ITER 4
#define MEANDER_COL_SNAKE 5

/* computes rows 1..max_n plus the order-only columns through
 * MEANDER_MAX_ITERATED; max_n <= MEANDER_MAX_TABLE */
meander_status meander_tables_build(int max_n, int threads, meander_tables** out);

/* reads the csv cache; MEANDER_EIO when absent or unreadable */
meander_status meander_tables_load(const char* dir, meander_tables** out);
meander_status meander_tables_save(const meander_tables* t, const char* dir);
void meander_tables_destroy(meander_tables* t);

int meander_tables_rows(const meander_tables* t);

/* highest n whose M cell is filled */
int meander_tables_full_rows(const meander_tables* t);

/* decimal string, "" for an unfilled cell, NULL when out of range; the
 * pointer stays valid while the handle lives */
const char* meander_tables_cell(const meander_tables* t, int n, int col);

int meander_tables_irr_rows(const meander_tables* t);
meander_status meander_tables_irr_row(const meander_tables* t, int idx, int* n, int* c,
                                      const char** count);

/* Same recursion under the literal reading that budgets each root by its
 * own order; shares the base table's irreducible counts. The M, M_black,
 * M_white columns differ from the corrected ones starting at N = 4. */
meander_status meander_tables_literal(const meander_tables* t, meander_tables** out);

#ifdef __cplusplus
}
#endif

#endif /* MEANDER_H */
