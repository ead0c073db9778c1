#ifndef BALCURVE_C_H
#define BALCURVE_C_H

/*
 * C interface to the balanced-curve toolkit.
 *
 * Every call returns a bc_status. On failure the thread's last error is set
 * and can be read with bc_last_error() ("Name: detail") and
 * bc_last_error_name() ("Name"). Strings handed out through char** are owned
 * by the caller and released with bc_string_free(). Handles are released
 * with their matching *_free function; passing NULL to any *_free is allowed.
 *
 * Rationals cross the boundary as text ("p/q", "p").
 */

#include <stddef.h>

#if defined(_WIN32)
#define BC_API __declspec(dllexport)
#else
#define BC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    BC_OK = 0,
    BC_ERR_DOMAIN = 1,   /* NonGeneric, Inadmissible, DoesNotCut, ... */
    BC_ERR_USAGE = 2,    /* bad argument, unparsable input */
    BC_ERR_INTERNAL = 3
} bc_status;

typedef struct bc_pieces bc_pieces;   /* curves and arcs from a curve file */
typedef struct bc_witness bc_witness;
typedef struct bc_cert bc_cert;
typedef struct bc_backend bc_backend; /* graph action for quasimorphisms */

BC_API const char* bc_last_error(void);
BC_API const char* bc_last_error_name(void);
BC_API void bc_string_free(char* s);
BC_API const char* bc_version(void);

/* ---- curve files ---- */
BC_API bc_status bc_pieces_parse(const char* text, bc_pieces** out);
BC_API bc_status bc_pieces_load(const char* path, bc_pieces** out);
BC_API void bc_pieces_free(bc_pieces* p);
BC_API size_t bc_pieces_count(const bc_pieces* p);
BC_API int bc_pieces_is_closed(const bc_pieces* p, size_t i);
BC_API bc_status bc_pieces_serialize(const bc_pieces* p, char** out);

/* Validation report: vertex count, orientation fix, area. */
BC_API bc_status bc_curve_validate(const bc_pieces* p, size_t i, char** report);
BC_API bc_status bc_curve_area(const bc_pieces* p, size_t i, char** area);

/* ---- balanced curve graph ---- */
BC_API bc_status bc_is_balanced(const bc_pieces* p, size_t i, const char* eps, int* result);
BC_API bc_status bc_adjacent(const bc_pieces* p, size_t i, size_t j, const char* eps, char** report);
BC_API bc_status bc_admissible(const bc_pieces* p, size_t i, size_t j, const char* eps, int* ok, char** report);
BC_API bc_status bc_project(const bc_pieces* p, size_t i, size_t j, const char* eps, bc_pieces** out);
BC_API bc_status bc_minimal_pair(const bc_pieces* p, size_t i, size_t j, const char* eps, bc_pieces** out);
BC_API bc_status bc_upper_bound(const bc_pieces* p, size_t i, size_t j, const char* eps, bc_cert** out);

/* ---- certificates ---- */
BC_API bc_status bc_cert_parse(const char* json, bc_cert** out);
BC_API void bc_cert_free(bc_cert* c);
BC_API bc_status bc_cert_to_json(const bc_cert* c, char** out);
BC_API long bc_cert_value(const bc_cert* c);
BC_API int bc_cert_is_upper(const bc_cert* c);
/* Re-checks against the curves stored in the certificate; *ok is 0 or 1. */
BC_API bc_status bc_cert_verify(const bc_cert* c, int* ok, char** failure);
BC_API bc_status bc_cert_render_svg(const bc_cert* c, char** svg);

/* ---- arrangements ---- */
BC_API bc_status bc_arr_faces(const bc_pieces* p, size_t i, size_t j, char** report);
BC_API bc_status bc_arr_bigons(const bc_pieces* p, size_t i, size_t j, char** report);
/* DOT text of the dual tree; directed != 0 adds directions and the central vertex.
 * side is "inside", "outside" or NULL; a closed first piece needs one. */
BC_API bc_status bc_arr_dual_tree(const bc_pieces* p, size_t i, size_t j, const char* side, int directed, char** dot);
BC_API bc_status bc_arr_render_svg(const bc_pieces* p, char** svg);
BC_API bc_status bc_dual_tree_render_svg(const bc_pieces* p, size_t i, size_t j, const char* side, char** svg);

/* ---- witnesses ---- */
/* profile: "uniform" or "skewed" (eps1 used for skewed, may be NULL otherwise). */
BC_API bc_status bc_witness_make(const char* eps, int n, const char* profile, const char* eps1, bc_witness** out);
BC_API bc_status bc_witness_parse(const char* text, bc_witness** out);
BC_API bc_status bc_witness_load(const char* path, bc_witness** out);
BC_API void bc_witness_free(bc_witness* w);
BC_API bc_status bc_witness_serialize(const bc_witness* w, char** out);
BC_API bc_status bc_witness_check(const bc_witness* w, const char* eps, int* ok, int* hole);
BC_API bc_status bc_witness_cuts(const bc_witness* w, const bc_pieces* p, size_t i, char** report);
BC_API bc_status bc_witness_project(const bc_witness* w, const bc_pieces* p, size_t i, char** report);
BC_API bc_status bc_lower_bound(const bc_pieces* p, size_t i, size_t j, const bc_witness* w, const char* eps,
                                bc_cert** out);
BC_API bc_status bc_witness_render_svg(const bc_witness* w, const bc_pieces* curves, char** svg);

/* ---- Farey graph ---- */
BC_API bc_status bc_farey_dist(const char* a, const char* b, long* out);
BC_API bc_status bc_farey_bfs(const char* a, const char* b, long cap, long* out);
/* matrix as "a,b;c,d"; CSV with columns n,image,farey_distance plus a fitted slope line. */
BC_API bc_status bc_farey_orbit_growth(const char* matrix, const char* s0, int n_max, char** csv);

/* ---- quasimorphisms ---- */
/* spec: "free:2", "line", "cycle:6", "farey:20" */
BC_API bc_status bc_backend_make(const char* spec, bc_backend** out);
BC_API void bc_backend_free(bc_backend* b);
/* basepoint may be NULL for the backend default. */
BC_API bc_status bc_qm_eval(const bc_backend* b, const char* g, const char* w, int R, const char* basepoint,
                            char** report);
BC_API bc_status bc_qm_copies(const bc_backend* b, const char* path, const char* w, long* out);
BC_API bc_status bc_qm_homogenize(const bc_backend* b, const char* g, const char* w, int R, const char* basepoint,
                                  int n_max, const char* defect_bound, char** report);
BC_API bc_status bc_qm_defect(const bc_backend* b, const char* w, int R, int samples, int max_len,
                              unsigned long long seed, char** value);
BC_API bc_status bc_qm_drift(const bc_backend* b, const char* w, int R, const char* x0, const char* y0, int samples,
                             int max_len, unsigned long long seed, char** value);
BC_API bc_status bc_qm_rank_test(int size, int R, int n_max, char** report);

/* ---- hyperbolicity, fragmentation ---- */
/* graph: "tree:B:D", "cycle:N", "path:N", "farey:D", or "file:PATH" (edge list). */
BC_API bc_status bc_hyp_delta(const char* graph, const char* method, int samples, unsigned long long seed,
                              char** value);
BC_API bc_status bc_gg_verify(const char* graph, const char* lambda, int* ok, char** failure);
BC_API bc_status bc_gg_delta_bound(const char* lambda, char** report);
BC_API bc_status bc_frag_bound(const char* phi, const char* defect, char** value);

/* ---- experiments ---- */
BC_API bc_status bc_two_scale(int n_max, const char* eps1, const char* eps2, char** csv, char** summary);

#ifdef __cplusplus
}
#endif

#endif
