// superharm command-line front end over the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "superharm/superharm.h"

namespace {

int statusExit(sh_status s) {
  switch (s) {
    case SH_OK: return 0;
    case SH_ERR_DOMAIN:
    case SH_ERR_INTERNAL: return 1;
    default: return 2;
  }
}

int report(sh_status s) {
  std::cerr << "error: " << sh_last_error() << "\n";
  return statusExit(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact harmonic analysis on the superspace R^{m|2n}", "superharm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(sh_version()));

  int m = -1, n = -1, k = -1, kmax = -1;
  std::string poly, grid, format = "json", suite;
  unsigned long long seed = 20240601ULL;
  bool timing = false;

  app.add_option("--m", m, "bosonic dimension m")->check(CLI::Range(0, 12));
  app.add_option("--n", n, "half the fermionic dimension (2n Grassmann variables)")->check(CLI::Range(0, 6));
  app.add_option("--k", k, "degree")->check(CLI::Range(0, 40));
  app.add_option("--kmax", kmax, "largest degree")->check(CLI::Range(0, 40));
  app.add_option("--poly", poly, "polynomial, e.g. \"x1^2 - 2*e1*e2\"");
  app.add_option("--grid", grid, "\"default\" or a list such as \"2:1,3:2\"");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed, "seed for sampled vectors and group elements");
  app.add_flag("--timing", timing, "include wall-clock timing in verify reports");

  app.add_subcommand("dim", "dimensions of P_k, H_k and L_(k)");
  app.add_subcommand("pizzetti", "supersphere integral of a polynomial");
  app.add_subcommand("decompose", "components of H_k under O(m) x Sp(2n)");
  app.add_subcommand("fischer", "Fischer decomposition of P_k");
  app.add_subcommand("mean", "spherical mean of a polynomial and its Darboux residual");
  app.add_subcommand("branch", "branching of L_(k) from osp(m|2n) to osp(m-1|2n)");
  auto* verify = app.add_subcommand("verify", "run an exact verification suite");
  verify->add_option("suite", suite, "sl2, invariance, casimir, dims, fischer, decomp, projectors, integration, "
                                     "darboux, irreducibility, branching, bigalgebra or all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  sh_params params;
  sh_params_init(&params);
  params.m = m;
  params.n = n;
  params.k = k;
  params.kmax = kmax;
  params.poly = poly.empty() ? nullptr : poly.c_str();
  params.grid = grid.empty() ? nullptr : grid.c_str();
  params.suite = suite.empty() ? nullptr : suite.c_str();
  params.seed = seed;
  params.timing = timing ? 1 : 0;

  const std::string command = app.get_subcommands().front()->get_name();
  sh_report* rep = nullptr;
  if (sh_status s = sh_run(command.c_str(), &params, &rep); s != SH_OK) {
    if (s == SH_ERR_PARSE && sh_last_error_position() >= 0 && !poly.empty())
      std::cerr << "  " << poly << "\n  " << std::string(static_cast<std::size_t>(sh_last_error_position()), ' ')
                << "^\n";
    return report(s);
  }
  sh_format fmt = format == "csv" ? SH_FORMAT_CSV : format == "text" ? SH_FORMAT_TEXT : SH_FORMAT_JSON;
  char* text = nullptr;
  if (sh_status s = sh_report_render(rep, fmt, &text); s != SH_OK) {
    sh_report_free(rep);
    return report(s);
  }
  std::fputs(text, stdout);
  sh_string_free(text);
  int code = sh_report_exit_code(rep);
  sh_report_free(rep);
  return code;
}
