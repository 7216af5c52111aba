/* Exercises the public C interface from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "superharm/superharm.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void test_poly(void) {
  sh_poly* p = NULL;
  sh_poly* lap = NULL;
  char* s = NULL;
  char* coeff = NULL;
  int pi = 99;

  EXPECT(sh_poly_parse(1, 1, "x1^2 - e1*e2", &p) == SH_OK);
  EXPECT(sh_poly_str(p, &s) == SH_OK);
  EXPECT(s && strstr(s, "x1^2") != NULL);
  sh_string_free(s);

  EXPECT(sh_poly_laplacian(p, &lap) == SH_OK);
  EXPECT(sh_poly_str(lap, &s) == SH_OK);
  EXPECT(s && strcmp(s, "-2") == 0);
  sh_string_free(s);
  sh_poly_free(lap);

  EXPECT(sh_poly_pizzetti(p, &coeff, &pi) == SH_OK);
  EXPECT(coeff && strcmp(coeff, "-1/1") == 0);
  EXPECT(pi == -1);
  sh_string_free(coeff);
  sh_poly_free(p);

  p = NULL;
  EXPECT(sh_poly_parse(2, 0, "1", &p) == SH_OK);
  EXPECT(sh_poly_pizzetti(p, &coeff, &pi) == SH_OK);
  EXPECT(coeff && strcmp(coeff, "2/1") == 0);
  EXPECT(pi == 1);
  sh_string_free(coeff);
  sh_poly_free(p);
}

static void test_errors(void) {
  sh_poly* p = NULL;
  EXPECT(sh_poly_parse(2, 1, "x1 + y7", &p) == SH_ERR_PARSE);
  EXPECT(p == NULL);
  EXPECT(sh_last_error_position() == 5);
  EXPECT(strlen(sh_last_error()) > 0);
  EXPECT(sh_poly_parse(-1, 1, "x1", &p) == SH_ERR_USAGE);
  EXPECT(sh_poly_parse(2, 1, NULL, &p) == SH_ERR_NULL);
  EXPECT(sh_poly_str(NULL, NULL) == SH_ERR_NULL);
}

static void test_space(void) {
  sh_space* h = NULL;
  size_t dim = 0;
  char* s = NULL;
  EXPECT(sh_space_harmonics(2, 1, 2, &h) == SH_OK);
  EXPECT(sh_space_dim(h, &dim) == SH_OK);
  EXPECT(dim == 7);
  EXPECT(sh_space_basis_str(h, 0, &s) == SH_OK);
  sh_string_free(s);
  EXPECT(sh_space_basis_str(h, 7, &s) == SH_ERR_USAGE);
  sh_space_free(h);
}

static void test_run(void) {
  sh_params p;
  sh_report* r = NULL;
  char* out = NULL;

  sh_params_init(&p);
  p.m = 2;
  p.n = 1;
  p.k = 2;
  EXPECT(sh_run("decompose", &p, &r) == SH_OK);
  EXPECT(sh_report_exit_code(r) == 0);
  EXPECT(sh_report_render(r, SH_FORMAT_JSON, &out) == SH_OK);
  EXPECT(out && strstr(out, "\"components\"") != NULL);
  sh_string_free(out);
  EXPECT(sh_report_render(r, SH_FORMAT_CSV, &out) == SH_OK);
  sh_string_free(out);
  sh_report_free(r);

  p.n = 2;
  r = NULL;
  EXPECT(sh_run("fischer", &p, &r) == SH_ERR_DOMAIN);
  EXPECT(r == NULL);
  EXPECT(sh_run("unknown", &p, &r) == SH_ERR_USAGE);
  EXPECT(sh_run(NULL, &p, &r) == SH_ERR_NULL);
}

int main(void) {
  EXPECT(strlen(sh_version()) > 0);
  test_poly();
  test_errors();
  test_space();
  test_run();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
