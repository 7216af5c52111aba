#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace superharm {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

Json bigJson(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

void requireMN(const CommandParams& p) {
  if (p.m < 0 || p.n < 0) throw UsageError("--m and --n are required and must be nonnegative");
  if (p.m > 12 || p.n > 6) throw UsageError("supported sizes are m <= 12 and n <= 6");
  if (p.m + p.n == 0) throw UsageError("m and n cannot both be zero");
}

void requireK(const CommandParams& p) {
  if (p.k < 0) throw UsageError("--k is required and must be nonnegative");
  if (p.k > 40) throw UsageError("--k must be at most 40");
}

Polynomial parsePoly(const CommandParams& p, const Frame& f) {
  if (p.poly.empty()) throw UsageError("--poly is required");
  return Polynomial::parse(f.spec, p.poly);
}

Json header(const std::string& command, const CommandParams& p) {
  Json d;
  d["schema_version"] = kSchemaVersion;
  d["command"] = command;
  Json params = Json::object();
  if (p.m >= 0) params["m"] = p.m;
  if (p.n >= 0) params["n"] = p.n;
  if (p.k >= 0) params["k"] = p.k;
  if (p.kmax >= 0) params["kmax"] = p.kmax;
  if (!p.poly.empty()) params["poly"] = p.poly;
  if (!p.grid.empty()) params["grid"] = p.grid;
  if (!p.suite.empty()) params["suite"] = p.suite;
  if (command == "verify") params["seed"] = p.seed;
  d["params"] = params;
  return d;
}

std::string yesNo(bool b) { return b ? "true" : "false"; }

// --------------------------------------------------------------------------

Report cmdDim(const CommandParams& p) {
  requireMN(p);
  if (p.k < 0 && p.kmax < 0) throw UsageError("--k or --kmax is required");
  Frame f = Frame::superspace(p.m, p.n);
  Report r;
  r.doc = header("dim", p);
  r.table.header = {"m", "n", "k", "dim_Pk", "dim_Hk_formula", "dim_Hk_nullspace", "dim_Lk", "window"};
  int k0 = p.k >= 0 ? p.k : 0, k1 = p.k >= 0 ? p.k : p.kmax;
  if (k1 > 40) throw UsageError("--k must be at most 40");
  Json rows = Json::array();
  std::ostringstream text;
  for (int k = k0; k <= k1; ++k) {
    Json row;
    row["k"] = k;
    BigInt pk = dimPk(p.m, p.n, k);
    std::size_t hk = harmonics(f, k).dim();
    const bool window = inWindow(p.m, p.n, k);
    row["dim_Pk"] = bigJson(pk);
    std::string formula = "n/a", lk = "n/a";
    if (p.m != 0) {
      BigInt fh = dimHkFormula(p.m, p.n, k), l = dimLk(p.m, p.n, k);
      row["dim_Hk_formula"] = bigJson(fh);
      row["dim_Hk_nullspace"] = hk;
      row["dim_Lk"] = bigJson(l);
      formula = fh.get_str();
      lk = l.get_str();
      if (BigInt(hk) != fh) r.exit_code = 1;
    } else {
      row["dim_Hk_formula"] = "n/a";
      row["dim_Hk_nullspace"] = hk;
      row["dim_Lk"] = "n/a";
    }
    row["window"] = window;
    rows.push_back(row);
    r.table.rows.push_back({std::to_string(p.m), std::to_string(p.n), std::to_string(k), pk.get_str(), formula,
                            std::to_string(hk), lk, yesNo(window)});
    text << "R^{" << p.m << "|" << 2 * p.n << "} k=" << k << ": dim P_k = " << pk.get_str() << ", dim H_k = " << hk
         << " (formula " << formula << "), dim L_k = " << lk << (window ? ", reducible window" : "") << "\n";
  }
  if (p.k >= 0)
    r.doc["results"] = rows[0];
  else
    r.doc["results"] = {{"rows", rows}};
  r.text = text.str();
  return r;
}

Report cmdPizzetti(const CommandParams& p) {
  requireMN(p);
  Frame f = Frame::superspace(p.m, p.n);
  Polynomial poly = parsePoly(p, f);
  Report r;
  r.doc = header("pizzetti", p);
  ScaledScalar v = pizzetti(poly, f);
  ScaledScalar b = berezinSphereOracle(poly, f);
  Json res;
  res["value"] = toJson(v);
  res["text"] = v.str();
  res["berezin_form"] = toJson(b);
  res["routes_agree"] = v == b;
  if (v != b) r.exit_code = 1;
  r.doc["results"] = res;
  r.table.header = {"poly", "coeff", "pi_exponent", "berezin_coeff", "berezin_pi_exponent"};
  r.table.rows.push_back({poly.str(), csvRational(v.coeff), std::to_string(v.pi_exponent), csvRational(b.coeff),
                          std::to_string(b.pi_exponent)});
  r.text = "T(" + poly.str() + ") = " + v.str() + (v == b ? "" : "  [Berezin form gives " + b.str() + "]") + "\n";
  return r;
}

Report cmdDecompose(const CommandParams& p) {
  requireMN(p);
  requireK(p);
  if (p.m == 0) throw DomainError("the decomposition of H_k requires m != 0");
  Frame f = Frame::superspace(p.m, p.n);
  HkDecomposition d = decomposition(f, p.k);
  std::size_t hk = harmonics(f, p.k).dim();
  Report r;
  r.doc = header("decompose", p);
  Json comps = Json::array();
  std::size_t total = 0;
  std::ostringstream text;
  text << "H_" << p.k << " on R^{" << p.m << "|" << 2 * p.n << "}, dim " << hk << "\n";
  r.table.header = {"l", "p", "q", "dim", "f"};
  for (const auto& c : d.components) {
    std::string fs = fkpq(f, c.l, c.p, c.q).str();
    comps.push_back({{"l", c.l}, {"p", c.p}, {"q", c.q}, {"dim", c.space.dim()}, {"f", fs}});
    total += c.space.dim();
    r.table.rows.push_back(
        {std::to_string(c.l), std::to_string(c.p), std::to_string(c.q), std::to_string(c.space.dim()), fs});
    text << "  (l,p,q) = (" << c.l << "," << c.p << "," << c.q << ")  dim " << c.space.dim() << "  f = " << fs << "\n";
  }
  r.doc["results"] = {{"dim_Hk", hk}, {"components", comps}, {"sum", total}};
  if (total != hk) r.exit_code = 1;
  r.text = text.str();
  return r;
}

Report cmdFischer(const CommandParams& p) {
  requireMN(p);
  requireK(p);
  Frame f = Frame::superspace(p.m, p.n);
  auto pieces = fischer(f, p.k);
  Report r;
  r.doc = header("fischer", p);
  SparseEchelon<Monomial> ech;
  std::size_t total = 0;
  Json arr = Json::array();
  std::ostringstream text;
  const std::size_t pk = enumerateMonomials(f, p.k).size();
  const std::string factor = p.m == 0 ? "theta" : "R";
  text << "P_" << p.k << " on R^{" << p.m << "|" << 2 * p.n << "}, dim " << pk << "\n";
  r.table.header = {"j", "harmonic_degree", "dim"};
  for (const auto& piece : pieces) {
    for (const auto& b : piece.space.basis()) ech.insert(b.terms());
    total += piece.space.dim();
    arr.push_back({{"j", piece.j}, {"harmonic_degree", piece.harmonic_degree}, {"dim", piece.space.dim()}});
    r.table.rows.push_back(
        {std::to_string(piece.j), std::to_string(piece.harmonic_degree), std::to_string(piece.space.dim())});
    text << "  " << factor << "^" << 2 * piece.j << " H_" << piece.harmonic_degree << "  dim " << piece.space.dim()
         << "\n";
  }
  const bool direct = total == pk && ech.rank() == pk;
  r.doc["results"] = {{"dim_Pk", pk}, {"pieces", arr}, {"direct_sum", direct}};
  if (!direct) r.exit_code = 1;
  text << "  direct sum: " << yesNo(direct) << "\n";
  r.text = text.str();
  return r;
}

Report cmdMean(const CommandParams& p) {
  requireMN(p);
  Frame f = Frame::superspace(p.m, p.n);
  Polynomial poly = parsePoly(p, f);
  MeanResult mean = sphereMean(poly, f);
  Polynomial res = darbouxResidual(poly, f);
  Report r;
  r.doc = header("mean", p);
  r.doc["results"] = {{"mean", mean.poly.str()},
                      {"pi_exponent", mean.pi_exponent},
                      {"darboux_residual", res.str()},
                      {"darboux_ok", res.isZero()}};
  if (!res.isZero()) r.exit_code = 1;
  r.table.header = {"poly", "mean", "pi_exponent", "darboux_residual"};
  r.table.rows.push_back({poly.str(), mean.poly.str(), std::to_string(mean.pi_exponent), res.str()});
  r.text = "MF(" + poly.str() + ") = pi^" + std::to_string(mean.pi_exponent) + " * (" + mean.poly.str() +
           ")\nDarboux residual: " + res.str() + "\n";
  return r;
}

Report cmdBranch(const CommandParams& p) {
  requireMN(p);
  requireK(p);
  BranchReport b = branchLevels(p.m, p.n, p.k);
  Report r;
  r.doc = header("branch", p);
  Json res;
  res["kind"] = branchKindName(b.kind);
  std::ostringstream text;
  text << "L_(" << p.k << ") of osp(" << p.m << "|" << 2 * p.n << ") restricted to osp(" << p.m - 1 << "|" << 2 * p.n
       << "): " << branchKindName(b.kind) << "\n";
  r.table.header = {"l", "dim_Lk"};
  if (b.kind != BranchKind::NotCompletelyReducible) {
    Json terms = Json::array();
    for (int l = b.lmin; l <= b.lmax; ++l) {
      BigInt d = dimLk(p.m - 1, p.n, l);
      terms.push_back({{"l", l}, {"dim", bigJson(d)}});
      r.table.rows.push_back({std::to_string(l), d.get_str()});
      text << "  l = " << l << "  dim " << d.get_str() << "\n";
    }
    res["lmin"] = b.lmin;
    res["lmax"] = b.lmax;
    res["terms"] = terms;
    res["sum"] = bigJson(b.sum);
    res["target"] = bigJson(b.target);
    res["identity_holds"] = b.holds;
    text << "  sum " << b.sum.get_str() << " = dim L_(" << p.k << ") " << b.target.get_str() << ": " << yesNo(b.holds)
         << "\n";
    if (!b.holds) r.exit_code = 1;
  } else {
    res["target"] = bigJson(b.target);
  }
  r.doc["results"] = res;
  r.text = text.str();
  return r;
}

Report cmdVerify(const CommandParams& p) {
  if (p.suite.empty()) throw UsageError("verify needs a suite name");
  const auto& names = suiteNames();
  if (std::find(names.begin(), names.end(), p.suite) == names.end())
    throw UsageError("unknown suite '" + p.suite + "'");
  VerifyOptions o;
  if (p.m >= 0 || p.n >= 0) {
    requireMN(p);
    if (!p.grid.empty()) throw UsageError("use either --grid or --m/--n");
    o.grid = {{p.m, p.n}};
  } else {
    o.grid = parseGrid(p.grid);
  }
  o.kmax = p.kmax;
  o.seed = p.seed;
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult s = runSuite(p.suite, o);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  Report r;
  r.doc = header("verify", p);
  Json grid = Json::array();
  for (auto g : o.grid) grid.push_back(std::to_string(g.m) + ":" + std::to_string(g.n));
  Json checks = Json::array();
  std::ostringstream text;
  r.table.header = {"group", "name", "m", "n", "k", "cases", "failures", "pass", "witness", "note"};
  std::size_t passed = 0;
  for (const auto& c : s.checks) {
    Json j;
    j["group"] = c.group;
    j["name"] = c.name;
    if (c.m >= 0) j["m"] = c.m;
    if (c.n >= 0) j["n"] = c.n;
    if (c.k >= 0) j["k"] = c.k;
    j["cases"] = c.cases;
    j["failures"] = c.failures;
    j["pass"] = c.pass();
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(j);
    passed += c.pass() ? 1 : 0;
    auto opt = [](int v) { return v >= 0 ? std::to_string(v) : std::string(); };
    r.table.rows.push_back({c.group, c.name, opt(c.m), opt(c.n), opt(c.k), std::to_string(c.cases),
                            std::to_string(c.failures), yesNo(c.pass()), c.witness, c.note});
    text << (c.pass() ? "PASS " : "FAIL ") << c.group << ": " << c.name;
    if (c.m >= 0) text << " (" << c.m << "|" << 2 * c.n << ")";
    if (c.k >= 0) text << " k=" << c.k;
    text << " [" << c.cases << " cases]";
    if (!c.note.empty()) text << " -- " << c.note;
    text << "\n";
    if (!c.pass()) text << "     witness: " << c.witness << "\n";
  }
  Json res;
  res["suite"] = p.suite;
  res["grid"] = grid;
  res["checks"] = checks;
  res["passed"] = passed;
  res["failed"] = s.checks.size() - passed;
  res["ok"] = s.pass();
  r.doc["results"] = res;
  if (p.timing) r.doc["timing"] = {{"seconds", secs}};
  text << (s.pass() ? "OK" : "FAILED") << ": " << passed << "/" << s.checks.size() << " checks passed\n";
  r.text = text.str();
  r.exit_code = s.pass() ? 0 : 1;
  return r;
}

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json toJson(const ScaledScalar& s) {
  return {{"coeff_num", bigJson(s.coeff.num())}, {"coeff_den", bigJson(s.coeff.den())}, {"pi_exponent", s.pi_exponent}};
}

std::string csvRational(const Rational& q) { return q.num().get_str() + "/" + q.den().get_str(); }

const std::vector<std::string>& commandNames() {
  static const std::vector<std::string> names{"dim", "pizzetti", "decompose", "fischer", "mean", "branch", "verify"};
  return names;
}

Report runCommand(const std::string& command, const CommandParams& p) {
  if (command == "dim") return cmdDim(p);
  if (command == "pizzetti") return cmdPizzetti(p);
  if (command == "decompose") return cmdDecompose(p);
  if (command == "fischer") return cmdFischer(p);
  if (command == "mean") return cmdMean(p);
  if (command == "branch") return cmdBranch(p);
  if (command == "verify") return cmdVerify(p);
  throw UsageError("unknown command '" + command + "'");
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::Json: {
      Json d = r.doc;
      d["ok"] = r.exit_code == 0;
      return d.dump(2) + "\n";
    }
    case Format::Csv: {
      std::ostringstream out;
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csvField(cells[i]);
        out << "\n";
      };
      line(r.table.header);
      for (const auto& row : r.table.rows) line(row);
      return out.str();
    }
    case Format::Text:
      return r.text;
  }
  return {};
}

}  // namespace superharm
