#ifndef GCX_H
#define GCX_H

/* C interface to the graph-complex core.
 *
 * Conventions:
 *  - every function returns an error code (GCX_OK on success);
 *  - output strings are heap-allocated; release them with gcx_free_string;
 *  - on failure, gcx_last_error() returns a thread-local description;
 *  - graphs use the text format  v=<n>;e=<tail>-<head>,...  (1-based) with
 *    optional ;w=, ;dec= and ;kind= attribute lists;
 *  - flavor names: cfGC, GC, b2GC, cfdGC, dGC, dGCs, dGCt, dGCst, dGCs+t,
 *    dGCwheel.
 */

#ifdef __cplusplus
extern "C" {
#endif

#define GCX_OK 0
#define GCX_EINVAL 1 /* bad arguments, unknown names, parse failures */
#define GCX_EFAIL 2  /* assertion failure inside the computation */

void gcx_free_string(char* s);
const char* gcx_last_error(void);

/* Canonical generator classes of the flavor with exactly v vertices and e
 * edges. *out_text receives newline-separated graph texts, *count their
 * number. */
int gcx_enumerate(const char* flavor, int k, int v, int e, char** out_text, long* count);

/* Differential of one generator (text format); JSON linear combination. */
int gcx_differential(const char* flavor, int k, const char* graph_text, char** out_json);

/* Cohomology dimensions at loop order b for degrees dmin..dmax as JSON.
 * sms_dir may be NULL; when set, every assembled matrix is dumped there in
 * SMS format. */
int gcx_cohomology(const char* flavor, int k, int b, int dmin, int dmax, const char* sms_dir,
                   char** out_json);

/* d^2 == 0 on all generators with v <= v_max, e <= e_max; *pass = 1/0. */
int gcx_verify_d2(const char* flavor, int k, int v_max, int e_max, int* pass);

/* Chain-map verification report (JSON). Names: f, b, fs, ft, a, aplusb,
 * cone, b_corrupt (intentional negative control). */
int gcx_verify_chainmap(const char* name, int k, int v_max, int e_max, char** out_json);

/* Full tetrahedron-class reproduction (JSON report). sms_dir as above. */
int gcx_grt_report(const char* sms_dir, char** out_json);

/* Templated derivation action on an (m, n) corolla; kind is "s" (D1) or
 * "t" (D2). */
int gcx_grt_derivation(const char* kind, int m, int n, char** out_json);

/* Degree of a bi-weighted generator for shift parameters (p, q). */
int gcx_holieb_degree(const char* graph_text, int p, int q, int* degree);

#ifdef __cplusplus
}
#endif

#endif
