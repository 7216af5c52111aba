#include "superharm/superharm.h"

#include "commands.hpp"

#include <cstdlib>
#include <cstring>

using namespace superharm;

struct sh_report {
  Report report;
};

struct sh_poly {
  Frame frame;
  Polynomial poly;
};

struct sh_space {
  GradedSpace space;
};

namespace {

thread_local std::string g_error;
thread_local long g_error_pos = -1;

sh_status fail(sh_status s, const std::string& msg, long pos = -1) {
  g_error = msg;
  g_error_pos = pos;
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
sh_status guarded(Fn&& fn) {
  try {
    g_error.clear();
    g_error_pos = -1;
    return fn();
  } catch (const UsageError& e) {
    return fail(SH_ERR_USAGE, e.what());
  } catch (const ParseError& e) {
    return fail(SH_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const DomainError& e) {
    return fail(SH_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SH_ERR_INTERNAL, e.what());
  }
}

sh_status checkMN(int m, int n) {
  if (m < 0 || n < 0 || m > 12 || n > 6 || m + n == 0)
    return fail(SH_ERR_USAGE, "need 0 <= m <= 12, 0 <= n <= 6, m + n > 0");
  return SH_OK;
}

}  // namespace

extern "C" {

const char* sh_version(void) { return "1.0.0"; }
const char* sh_last_error(void) { return g_error.c_str(); }
long sh_last_error_position(void) { return g_error_pos; }
void sh_string_free(char* s) { std::free(s); }

void sh_params_init(sh_params* p) {
  if (!p) return;
  p->m = p->n = p->k = p->kmax = -1;
  p->poly = p->grid = p->suite = nullptr;
  p->seed = 20240601ULL;
  p->timing = 0;
}

sh_status sh_run(const char* command, const sh_params* params, sh_report** out) {
  if (!command || !params || !out) return fail(SH_ERR_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    CommandParams p;
    p.m = params->m;
    p.n = params->n;
    p.k = params->k;
    p.kmax = params->kmax;
    if (params->poly) p.poly = params->poly;
    if (params->grid) p.grid = params->grid;
    if (params->suite) p.suite = params->suite;
    p.seed = params->seed;
    p.timing = params->timing != 0;
    auto* r = new sh_report{runCommand(command, p)};
    *out = r;
    return SH_OK;
  });
}

sh_status sh_report_render(const sh_report* r, sh_format format, char** out) {
  if (!r || !out) return fail(SH_ERR_NULL, "null argument");
  return guarded([&] {
    Format f = format == SH_FORMAT_CSV ? Format::Csv : format == SH_FORMAT_TEXT ? Format::Text : Format::Json;
    *out = dup(render(r->report, f));
    return *out ? SH_OK : fail(SH_ERR_INTERNAL, "out of memory");
  });
}

int sh_report_exit_code(const sh_report* r) { return r ? r->report.exit_code : 1; }
void sh_report_free(sh_report* r) { delete r; }

sh_status sh_poly_parse(int m, int n, const char* text, sh_poly** out) {
  if (!text || !out) return fail(SH_ERR_NULL, "null argument");
  *out = nullptr;
  if (sh_status s = checkMN(m, n); s != SH_OK) return s;
  return guarded([&] {
    Frame f = Frame::superspace(m, n);
    *out = new sh_poly{f, Polynomial::parse(f.spec, text)};
    return SH_OK;
  });
}

sh_status sh_poly_str(const sh_poly* p, char** out) {
  if (!p || !out) return fail(SH_ERR_NULL, "null argument");
  return guarded([&] {
    *out = dup(p->poly.str());
    return SH_OK;
  });
}

sh_status sh_poly_pizzetti(const sh_poly* p, char** coeff, int* pi_exponent) {
  if (!p || !coeff || !pi_exponent) return fail(SH_ERR_NULL, "null argument");
  return guarded([&] {
    ScaledScalar v = pizzetti(p->poly, p->frame);
    *coeff = dup(csvRational(v.coeff));
    *pi_exponent = v.pi_exponent;
    return SH_OK;
  });
}

sh_status sh_poly_laplacian(const sh_poly* p, sh_poly** out) {
  if (!p || !out) return fail(SH_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new sh_poly{p->frame, laplacian(p->frame)(p->poly)};
    return SH_OK;
  });
}

void sh_poly_free(sh_poly* p) { delete p; }

sh_status sh_space_harmonics(int m, int n, int k, sh_space** out) {
  if (!out) return fail(SH_ERR_NULL, "null argument");
  *out = nullptr;
  if (sh_status s = checkMN(m, n); s != SH_OK) return s;
  if (k < 0 || k > 40) return fail(SH_ERR_USAGE, "need 0 <= k <= 40");
  return guarded([&] {
    *out = new sh_space{harmonics(Frame::superspace(m, n), k)};
    return SH_OK;
  });
}

sh_status sh_space_dim(const sh_space* s, size_t* dim) {
  if (!s || !dim) return fail(SH_ERR_NULL, "null argument");
  *dim = s->space.dim();
  return SH_OK;
}

sh_status sh_space_basis_str(const sh_space* s, size_t index, char** out) {
  if (!s || !out) return fail(SH_ERR_NULL, "null argument");
  if (index >= s->space.dim()) return fail(SH_ERR_USAGE, "basis index out of range");
  return guarded([&] {
    *out = dup(s->space.at(index).str());
    return SH_OK;
  });
}

void sh_space_free(sh_space* s) { delete s; }

}  // extern "C"
