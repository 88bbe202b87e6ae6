#ifndef COVERLAB_H
#define COVERLAB_H

/*
 * coverlab - exact engines for covering theorems on rings and abelian
 * groups: proper unions by subgroups, cosets, subrings and subsemigroups.
 *
 * Every function is stateless and thread-safe; results are returned through
 * opaque handles owning the canonical JSON report. Inputs are JSON documents
 * in the schemas described in the project README.
 */

#ifdef _WIN32
#define COVERLAB_API __declspec(dllexport)
#else
#define COVERLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum coverlab_status {
  COVERLAB_OK = 0,            /* property verified / predicate true */
  COVERLAB_REFUTED = 1,       /* refuted / predicate false; witness in report */
  COVERLAB_INCONCLUSIVE = 2,  /* bounded search exhausted */
  COVERLAB_EINPUT = 3,        /* malformed JSON or schema violation */
  COVERLAB_EBOUND = 4,        /* enumeration bound exceeded */
  COVERLAB_EINTERNAL = 5
} coverlab_status;

typedef struct coverlab_result coverlab_result;

COVERLAB_API const char* coverlab_version(void);

/*
 * Generic entry point over {"command": "...", ...} requests; the commands
 * mirror the CLI subcommands. On any status a result handle is produced
 * (unless out is NULL); it must be released with coverlab_result_free.
 */
COVERLAB_API coverlab_status coverlab_run_json(const char* request_json,
                                               coverlab_result** out);

/* Convenience wrappers over the same engine. */
COVERLAB_API coverlab_status coverlab_descriptor_check(const char* predicate,
                                                       const char* descriptor_json,
                                                       coverlab_result** out);
COVERLAB_API coverlab_status coverlab_group_cover(const char* action,
                                                  const char* problem_json,
                                                  coverlab_result** out);
COVERLAB_API coverlab_status coverlab_lattice_verify(const char* cover_json,
                                                     long box_radius,
                                                     coverlab_result** out);
COVERLAB_API coverlab_status coverlab_zx_verify(unsigned long long samples,
                                                unsigned long long seed,
                                                coverlab_result** out);
COVERLAB_API coverlab_status coverlab_units_classify(const char* rationals_json,
                                                     coverlab_result** out);
COVERLAB_API coverlab_status coverlab_field_refute(const char* request_json,
                                                   coverlab_result** out);

COVERLAB_API coverlab_status coverlab_result_status(const coverlab_result* r);
/* Canonical JSON report (sorted keys, integers only, newline-terminated). */
COVERLAB_API const char* coverlab_result_json(const coverlab_result* r);
/* Human-readable report naming the theorem behind the verdict. */
COVERLAB_API const char* coverlab_result_text(const coverlab_result* r);
/* Error code and message; empty strings when the run succeeded. */
COVERLAB_API const char* coverlab_result_error_code(const coverlab_result* r);
COVERLAB_API const char* coverlab_result_error(const coverlab_result* r);
COVERLAB_API void coverlab_result_free(coverlab_result* r);

#ifdef __cplusplus
}
#endif

#endif /* COVERLAB_H */
