#ifndef BICM_BICM_H
#define BICM_BICM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BICM_API __declspec(dllexport)
#else
#define BICM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bicm_status {
  BICM_OK = 0,
  BICM_ERR_INVALID_ARGUMENT,
  BICM_ERR_PARSE,
  BICM_ERR_SEMANTIC,
  BICM_ERR_NOT_BIHOMOGENEOUS,
  BICM_ERR_NOT_MONOMIAL,
  BICM_ERR_UNIT_IDEAL,
  BICM_ERR_ZERO_MODULE,
  BICM_ERR_NO_REGULAR_FORM,
  BICM_ERR_UNDECIDABLE,
  BICM_ERR_UNSUPPORTED,
  BICM_ERR_VERIFICATION,
  BICM_ERR_INTERNAL
} bicm_status;

typedef enum bicm_block { BICM_BLOCK_P = 0, BICM_BLOCK_Q = 1, BICM_BLOCK_M = 2 } bicm_block;

typedef struct bicm_ring bicm_ring;
typedef struct bicm_ideal bicm_ideal;
typedef struct bicm_verdict bicm_verdict;

BICM_API const char* bicm_version(void);
BICM_API const char* bicm_status_string(bicm_status status);
/* Message of the last failure on the calling thread; empty when none. */
BICM_API const char* bicm_last_error(void);

/* characteristic 0 selects the rationals, otherwise a prime below 2^62. */
BICM_API bicm_status bicm_ring_new(int m, int n, uint64_t characteristic, bicm_ring** out);
BICM_API void bicm_ring_free(bicm_ring* ring);

/* Comma-separated generators, e.g. "x1*y1 + x2*y2, x1^2". */
BICM_API bicm_status bicm_ideal_parse(const bicm_ring* ring, const char* generators, bicm_ideal** out);
BICM_API void bicm_ideal_free(bicm_ideal* ideal);
/* Reduced Groebner basis as "(g1, g2, ...)"; free with bicm_string_free. */
BICM_API bicm_status bicm_ideal_groebner(const bicm_ideal* ideal, char** out);
BICM_API bicm_status bicm_ideal_contains(const bicm_ideal* ideal, const char* polynomial, int* out);

BICM_API bicm_status bicm_krull_dim(const bicm_ideal* ideal, int* out);
BICM_API bicm_status bicm_cd(const bicm_ideal* ideal, bicm_block block, int* out);
BICM_API bicm_status bicm_grade(const bicm_ideal* ideal, bicm_block block, uint64_t seed, int* out);

BICM_API bicm_status bicm_seq_cm(const bicm_ideal* ideal, bicm_block block, uint64_t seed, bicm_verdict** out);
BICM_API void bicm_verdict_free(bicm_verdict* verdict);
BICM_API int bicm_verdict_decision(const bicm_verdict* verdict);
/* "relative-cm", "cd-le-1", "monomial-filtration", "hypersurface-rank1", "unmixed-shortcut". */
BICM_API const char* bicm_verdict_route(const bicm_verdict* verdict);
BICM_API size_t bicm_verdict_level_count(const bicm_verdict* verdict);
BICM_API bicm_status bicm_verdict_level(const bicm_verdict* verdict, size_t level, int* cd, int* grade,
                                        int* relative_cm);

typedef struct bicm_run_options {
  const char* wrt;  /* "P", "Q", "m" or NULL for the file's option / Q */
  uint64_t seed;
  int seed_set;     /* nonzero: seed overrides the file's option */
  int text_format;  /* nonzero: key: value lines instead of JSON */
  int verify;       /* nonzero: re-check certificates */
} bicm_run_options;

/* Runs a CLI command on problem-file text. On BICM_OK, *document holds the
 * result document (free with bicm_string_free) and *exit_code the process
 * exit code it maps to: 0 decided, 2 unsupported, 3 parse error, 4 internal.
 * Fails only for an unknown command or bad arguments. */
BICM_API bicm_status bicm_run(const char* command, const char* problem_text, const bicm_run_options* options,
                              char** document, int* exit_code);

BICM_API void bicm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
