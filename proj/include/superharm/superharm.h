/*
 * superharm: exact harmonic analysis on the superspace R^{m|2n}.
 *
 * All functions return an sh_status. On failure, sh_last_error() describes
 * the problem for the calling thread. Strings handed out by the library are
 * released with sh_string_free, handles with their matching *_free.
 */
#ifndef SUPERHARM_H
#define SUPERHARM_H

#include <stddef.h>

#if defined(_WIN32)
#define SH_API __declspec(dllexport)
#else
#define SH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sh_status {
  SH_OK = 0,
  SH_ERR_USAGE = 1,    /* missing or invalid parameters */
  SH_ERR_PARSE = 2,    /* polynomial or grid text did not parse */
  SH_ERR_DOMAIN = 3,   /* mathematically undefined request, e.g. Fischer with M in -2N */
  SH_ERR_NULL = 4,     /* a required pointer was NULL */
  SH_ERR_INTERNAL = 5
} sh_status;

typedef enum sh_format { SH_FORMAT_JSON = 0, SH_FORMAT_CSV = 1, SH_FORMAT_TEXT = 2 } sh_format;

typedef struct sh_report sh_report;
typedef struct sh_poly sh_poly;
typedef struct sh_space sh_space;

typedef struct sh_params {
  int m, n, k, kmax;      /* negative means unset */
  const char* poly;       /* polynomial text, e.g. "x1^2 + e1*e2" */
  const char* grid;       /* "default" or "m:n,m:n" */
  const char* suite;      /* verify suite name */
  unsigned long long seed;
  int timing;             /* nonzero adds wall-clock timing to verify reports */
} sh_params;

SH_API const char* sh_version(void);
SH_API const char* sh_last_error(void);
/* Character offset of the last parse error, or -1. */
SH_API long sh_last_error_position(void);
SH_API void sh_string_free(char* s);

SH_API void sh_params_init(sh_params* p);

/* command: dim, pizzetti, decompose, fischer, mean, branch, verify */
SH_API sh_status sh_run(const char* command, const sh_params* params, sh_report** out);
SH_API sh_status sh_report_render(const sh_report* r, sh_format format, char** out);
/* 0 when every exact check in the report passed, 1 otherwise. */
SH_API int sh_report_exit_code(const sh_report* r);
SH_API void sh_report_free(sh_report* r);

SH_API sh_status sh_poly_parse(int m, int n, const char* text, sh_poly** out);
SH_API sh_status sh_poly_str(const sh_poly* p, char** out);
/* Supersphere integral as coeff * pi^pi_exponent; coeff is "num/den". */
SH_API sh_status sh_poly_pizzetti(const sh_poly* p, char** coeff, int* pi_exponent);
SH_API sh_status sh_poly_laplacian(const sh_poly* p, sh_poly** out);
SH_API void sh_poly_free(sh_poly* p);

/* Harmonic polynomials of degree k on R^{m|2n}. */
SH_API sh_status sh_space_harmonics(int m, int n, int k, sh_space** out);
SH_API sh_status sh_space_dim(const sh_space* s, size_t* dim);
SH_API sh_status sh_space_basis_str(const sh_space* s, size_t index, char** out);
SH_API void sh_space_free(sh_space* s);

#ifdef __cplusplus
}
#endif

#endif
