/* wgon — optimal convex w-gons over planar point sets.
 *
 * C interface to the solver library: opaque handles, status codes, and
 * string outputs that the caller frees with wg_string_free. All functions
 * are safe to call from multiple threads as long as each handle is used by
 * one thread at a time; wg_last_error is thread-local.
 */
#ifndef WGON_H
#define WGON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wg_status {
    WG_OK = 0,
    WG_EINVAL = 2,      /* bad parameter or objective/algorithm combination */
    WG_EPARSE = 3,      /* malformed instance text */
    WG_EDEGENERATE = 4, /* input violates general position */
    WG_EXHAUSTED = 5,   /* oracle enumeration budget or timeout exceeded */
    WG_ELIMIT = 6,      /* desk-scale guardrail hit (see allow_large) */
    WG_EIO = 7,         /* file system failure */
    WG_EINTERNAL = 8    /* invariant breach inside the library */
} wg_status;

const char *wg_status_name(wg_status status);

/* Detail message for the most recent failure on this thread. */
const char *wg_last_error(void);

const char *wg_version(void);

typedef struct wg_points wg_points;
typedef struct wg_solution wg_solution;

/* ---- point sets ---- */

/* xy holds n pairs (x0, y0, x1, y1, ...); |coord| <= 2^20. */
wg_status wg_points_create(const int64_t *xy, int n, wg_points **out);

/* Deterministic seeded generator; shape is uniform | annulus | clustered.
 * Coordinates land in [0, range]^2 and the result is in general position. */
wg_status wg_points_generate(int n, uint64_t seed, int64_t range, const char *shape,
                             wg_points **out);

/* CSV ("x,y" per line, '#' comments) or the JSON envelope; autodetected. */
wg_status wg_points_parse(const char *text, wg_points **out);
wg_status wg_points_load(const char *path, wg_points **out);

/* Format chosen by extension: .json for the envelope, anything else CSV. */
wg_status wg_points_save(const wg_points *pts, const char *path);

void wg_points_free(wg_points *pts);

int wg_points_count(const wg_points *pts);
wg_status wg_points_get(const wg_points *pts, int index, int64_t *x, int64_t *y);

/* 1 when duplicate points or collinear triples exist (detail in
 * wg_last_error), 0 for general position. */
int wg_points_degenerate(const wg_points *pts);

char *wg_points_to_csv(const wg_points *pts);
char *wg_points_to_json(const wg_points *pts);

/* ---- solving ---- */

typedef struct wg_solve_options {
    const char *objective; /* min-area | min-perimeter | minch | budget */
    const char *algorithm; /* baseline | doubling | oracle */
    int w;                 /* polygon size (w-gon) or kept-point count (minch) */
    int has_budget_area2;
    int64_t budget_area2;  /* budget objective, twice-area units */
    int has_budget_perimeter;
    double budget_perimeter;
    int threads;     /* 1 = sequential (default), 0 = auto, n = explicit */
    int strict_seam; /* doubling only: require convex seam turns while merging */
    int perturb;     /* deterministically perturb degenerate inputs */
    int allow_large; /* lift the desk-scale size guardrails */
    int experimental; /* unlock measured-but-unproven paths (minch via doubling) */
    uint64_t oracle_max_subsets; /* 0 = default (1e6) */
    double oracle_timeout_sec;   /* 0 = default (120 s) */
} wg_solve_options;

void wg_solve_options_init(wg_solve_options *opts);

/* Infeasibility is a result, not an error: the call returns WG_OK and the
 * solution reports wg_solution_feasible() == 0. */
wg_status wg_solve(const wg_points *pts, const wg_solve_options *opts, wg_solution **out);

int wg_solution_feasible(const wg_solution *sol);
int wg_solution_valid(const wg_solution *sol);

/* Objective value. The integer form is authoritative for min-area (twice the
 * area), minch and budget (hull size); the real form for min-perimeter.
 * Returns WG_EINVAL when the requested form is not the native one. */
wg_status wg_solution_value_int(const wg_solution *sol, int64_t *out);
wg_status wg_solution_value_real(const wg_solution *sol, double *out);

int wg_solution_size(const wg_solution *sol);
int wg_solution_vertex(const wg_solution *sol, int k);
int wg_solution_outlier_count(const wg_solution *sol);
int wg_solution_outlier(const wg_solution *sol, int k);
int64_t wg_solution_coverage(const wg_solution *sol); /* -1 when absent */
const char *wg_solution_algorithm(const wg_solution *sol);

char *wg_solution_to_json(const wg_solution *sol);
/* Same without the stats object; byte-identical across reruns. */
char *wg_solution_to_json_no_stats(const wg_solution *sol);

void wg_solution_free(wg_solution *sol);

/* ---- figures and reports ---- */

/* sol may be NULL to draw the bare point set. */
char *wg_render_svg(const wg_points *pts, const wg_solution *sol);

/* Render an explicit witness polygon / outlier marking (e.g. one read back
 * from a saved solution file). Either array may be NULL with count 0. */
char *wg_render_svg_indices(const wg_points *pts, const int *polygon, int polygon_len,
                            const int *outliers, int outlier_len);

/* Baseline-vs-doubling agreement measurement over a batch of instances.
 * weight is area2 | perimeter | vertex-count | coverage. */
wg_status wg_conformance(const wg_points *const *instances, int count, const int *ws, int w_count,
                         const char *weight, int strict_seam, int threads, char **csv_out);

void wg_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* WGON_H */
