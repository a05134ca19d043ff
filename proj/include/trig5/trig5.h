/* trig5 — symbolic engine for the rational cohomology of the moduli space
 * of trigonal genus-5 curves.
 *
 * C interface to the shared library: opaque polynomial handles plus
 * report-level entry points returning rendered text.  Every function that
 * can fail returns a t5_status; t5_last_error() describes the most recent
 * failure on the calling thread.  Strings returned through char** are owned
 * by the caller and must be released with t5_string_free().
 */

#ifndef TRIG5_TRIG5_H
#define TRIG5_TRIG5_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum t5_status {
  T5_OK = 0,
  T5_ERR_USAGE = 1,     /* unknown id, bad flag value */
  T5_ERR_KIND = 2,      /* Borel-Moore vs cohomological confusion */
  T5_ERR_DOMAIN = 3,    /* precondition violated */
  T5_ERR_REMAINDER = 4, /* inexact division */
  T5_ERR_AMBIGUOUS = 5, /* extension or solve not determined */
  T5_ERR_MISMATCH = 6,  /* verification against pinned data failed */
  T5_ERR_INTERNAL = 7
} t5_status;

typedef struct t5_poly t5_poly; /* opaque graded Tate-class polynomial */

#define T5_KIND_BM 1
#define T5_KIND_COHOM 0

/* ---- polynomial handles ---- */

t5_poly* t5_poly_new(int bm_kind);
t5_poly* t5_poly_clone(const t5_poly* p);
void t5_poly_free(t5_poly* p);

t5_status t5_poly_add_term(t5_poly* p, long weight, long degree, long long mult);
int t5_poly_equal(const t5_poly* a, const t5_poly* b);
long long t5_poly_class_count(const t5_poly* p);

t5_status t5_poly_add(const t5_poly* a, const t5_poly* b, t5_poly** out);
t5_status t5_poly_mul(const t5_poly* a, const t5_poly* b, t5_poly** out);
t5_status t5_poly_shift(const t5_poly* p, long dw, long dd, t5_poly** out);
t5_status t5_poly_cohomology_to_bm(const t5_poly* p, long n, t5_poly** out);
t5_status t5_poly_bm_to_cohomology(const t5_poly* p, long n, t5_poly** out);
t5_status t5_poly_alexander_dual(const t5_poly* p, long n, t5_poly** out);
t5_status t5_poly_exact_div(const t5_poly* p, const t5_poly* d, t5_poly** out);

/* base polynomial of the two-row C*-bundle page; killed_json receives the
 * cancelled differential pairs as a JSON array */
t5_status t5_poly_wang_solve(const t5_poly* total, t5_poly** base, char** killed_json);

/* Euler specialization as JSON {"terms": ..., "pretty": ...} */
t5_status t5_poly_euler(const t5_poly* p, char** out);

/* format: "json" or "pretty" */
t5_status t5_poly_render(const t5_poly* p, const char* format, char** out);

/* ---- report-level commands; format: "json", "markdown" or "pretty" ---- */

t5_status t5_lemma(const char* id, const char* format, char** out);
t5_status t5_column(const char* id, const char* format, char** out);
t5_status t5_table(const char* id, const char* format, char** out);
/* all_ok is set to 1 when every embedded assertion of the pipeline holds */
t5_status t5_pipeline(const char* format, char** out, int* all_ok);
t5_status t5_appendix(int config, const char* format, char** out);
/* spaces_csv/qs_csv: comma-separated lists, or NULL for the full registry */
t5_status t5_verify(const char* spaces_csv, const char* qs_csv, const char* format, char** out,
                    int* all_match);
t5_status t5_explain(const char* id, const char* format, char** out);

void t5_string_free(char* s);
const char* t5_last_error(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRIG5_TRIG5_H */
