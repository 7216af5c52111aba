#include "repr.hpp"

#include <bit>
#include <deque>
#include <random>

namespace superharm {

namespace {

bool isNonpositiveEven(int M) { return M <= 0 && M % 2 == 0; }

void addTerm(Terms& out, const Monomial& m, const Rational& c) {
  if (c.isZero()) return;
  auto [it, fresh] = out.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.isZero()) out.erase(it);
  }
}

SparseVec<std::size_t> coordsOrThrow(const GradedSpace& s, const Polynomial& p, const char* what) {
  auto c = s.coordinates(p);
  if (!c) throw DomainError(std::string(what) + ": vector leaves the space");
  return *c;
}

Polynomial rPower(const Frame& f, int e) { return rSquaredPoly(f).pow(e); }

// (-1)^{bosonic degree}; fermionic variables change only the fermionic degree
long kleinSign(const Monomial& mono) {
  int bos = mono.deg - std::popcount(mono.fermions);
  return bos % 2 == 0 ? 1 : -1;
}

}  // namespace

SparseVec<std::size_t> applyMatrix(const SparseMatrix& A, const SparseVec<std::size_t>& v) {
  SparseVec<std::size_t> out;
  for (const auto& [j, c] : v) axpy(out, c, A.at(j));
  return out;
}

ModuleRealization realize(const GradedSpace& space, const std::vector<IndexedOp>& gens) {
  ModuleRealization mod;
  mod.dim = space.dim();
  for (const auto& g : gens) {
    mod.names.push_back(g.op.name());
    mod.matrices.push_back(sparseMatrixOf(g.op, space, space));
  }
  return mod;
}

SubmoduleReport invariantClosure(const std::vector<SparseVec<std::size_t>>& seeds, const ModuleRealization& mod) {
  SparseEchelon<std::size_t> ech;
  SubmoduleReport rep;
  std::deque<SparseVec<std::size_t>> queue;
  auto push = [&](SparseVec<std::size_t> v) {
    if (v.empty() || !ech.insert(v)) return;
    rep.basis.push_back(v);
    queue.push_back(std::move(v));
  };
  for (const auto& s : seeds) push(s);
  while (!queue.empty() && ech.rank() < mod.dim) {
    auto v = std::move(queue.front());
    queue.pop_front();
    for (const auto& A : mod.matrices) {
      push(applyMatrix(A, v));
      if (ech.rank() == mod.dim) break;
    }
  }
  rep.dim = ech.rank();
  rep.is_whole = rep.dim == mod.dim;
  rep.is_proper = rep.dim > 0 && !rep.is_whole;
  return rep;
}

bool inWindow(int m, int n, int k) {
  const int M = m - 2 * n;
  return m > 0 && isNonpositiveEven(M) && 2 * k >= 4 - M && k <= 2 - M;
}

bool irreduciblePredicate(int m, int n, int k) { return !inWindow(m, n, k); }

std::vector<SparseVec<std::size_t>> sampleVectors(std::size_t dim, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<SparseVec<std::size_t>> out;
  if (dim == 0) return out;
  while (out.size() < count) {
    SparseVec<std::size_t> v;
    for (std::size_t i = 0; i < dim; ++i) {
      long a = num(rng), b = den(rng);
      if (a != 0) v.emplace(i, Rational::fraction(a, b));
    }
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

std::vector<bool> ComponentGraph::reach(const std::vector<std::size_t>& start) const {
  std::vector<bool> seen(edge.size(), false);
  std::vector<std::size_t> stack;
  for (auto s : start)
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    auto c = stack.back();
    stack.pop_back();
    for (std::size_t d = 0; d < edge.size(); ++d)
      if (edge[c][d] && !seen[d]) {
        seen[d] = true;
        stack.push_back(d);
      }
  }
  return seen;
}

std::size_t ComponentGraph::dimOf(const std::vector<bool>& set) const {
  std::size_t d = 0;
  for (std::size_t c = 0; c < set.size(); ++c)
    if (set[c]) d += decomp.components[c].space.dim();
  return d;
}

ComponentGraph componentGraph(const Frame& f, int k) {
  ComponentGraph g;
  g.decomp = decomposition(f, k);
  const std::size_t nc = g.decomp.components.size();
  g.edge.assign(nc, std::vector<bool>(nc, false));
  auto gens = ospGenerators(f);
  for (std::size_t c = 0; c < nc; ++c) {
    const Polynomial& v = g.decomp.components[c].space.at(0);
    for (const auto& gen : gens) {
      Polynomial w = gen.op(v);
      if (w.isZero()) continue;
      for (auto d : g.decomp.support(w)) g.edge[c][d] = true;
    }
  }
  return g;
}

bool IrreducibilityReport::matches() const {
  if (!saturation_agrees) return false;
  if (dim == 0) return true;
  if (predicate != irreducible) return false;
  return !window || window_is_closure;
}

IrreducibilityReport checkIrreducible(const Frame& f, int k, std::uint64_t seed, std::size_t samples,
                                      std::size_t saturation_limit) {
  IrreducibilityReport rep;
  rep.m = f.m();
  rep.n = f.n();
  rep.k = k;
  if (f.m() == 0) throw DomainError("irreducibility check requires m != 0");
  GradedSpace H = harmonics(f, k);
  rep.dim = H.dim();
  rep.predicate = irreduciblePredicate(f.m(), f.n(), k);
  rep.window = inWindow(f.m(), f.n(), k);
  if (rep.dim == 0) return rep;

  std::vector<Polynomial> seedPolys = H.basis();
  for (const auto& s : sampleVectors(H.dim(), samples, seed)) seedPolys.push_back(H.combine(s));
  std::optional<Polynomial> windowSeed;
  if (rep.window) {
    const int M = f.superdim();
    GradedSpace low = harmonics(f, 2 - M - k);
    rep.window_dim = low.dim();
    windowSeed = rPower(f, k + M / 2 - 1) * low.at(0);
    seedPolys.push_back(*windowSeed);
  }
  rep.seeds = seedPolys.size();

  // The component graph is exact only when every component is irreducible
  // under the even part, which needs m >= 3; smaller m uses saturation.
  const bool useGraph = f.m() >= 3;
  const bool saturate = !useGraph || rep.dim <= saturation_limit;
  std::optional<ComponentGraph> graph;
  std::optional<ModuleRealization> mod;
  if (useGraph) graph = componentGraph(f, k);
  if (saturate) mod = realize(H, ospGenerators(f));
  rep.saturation_checked = saturate && useGraph;

  rep.min_closure = rep.dim;
  std::size_t windowClosure = 0;
  for (std::size_t s = 0; s < seedPolys.size(); ++s) {
    std::size_t d = 0;
    if (graph) d = graph->dimOf(graph->reach(graph->decomp.support(seedPolys[s])));
    if (mod) {
      std::size_t sd = invariantClosure({coordsOrThrow(H, seedPolys[s], "checkIrreducible")}, *mod).dim;
      if (graph && sd != d) rep.saturation_agrees = false;
      d = sd;
    }
    const bool isWindowSeed = windowSeed && s + 1 == seedPolys.size();
    if (isWindowSeed) windowClosure = d;
    if (d == rep.dim) {
      if (!isWindowSeed) ++rep.whole;
    } else if (d < rep.min_closure) {
      rep.min_closure = d;
      rep.witness = seedPolys[s].str();
    }
  }
  if (windowSeed) rep.seeds -= 1;
  rep.irreducible = rep.min_closure == rep.dim;
  rep.window_is_closure = rep.window && windowClosure == rep.window_dim && rep.min_closure == rep.window_dim;
  return rep;
}

namespace {

std::vector<RatVector> r2TimesLower(const Frame& f, int k, const GradedSpace& Pk) {
  std::vector<RatVector> out;
  if (k < 2) return out;
  Polynomial r2 = rSquaredPoly(f);
  for (const auto& mono : enumerateMonomials(f, k - 2))
    out.push_back(Pk.denseCoordinates(r2 * Polynomial::monomial(f.spec, mono)));
  return out;
}

std::vector<RatVector> harmonicIntersection(const Frame& f, int k) {
  GradedSpace Pk = monomialBasisPk(f, k), H = harmonics(f, k);
  std::vector<RatVector> h;
  for (const auto& b : H.basis()) h.push_back(Pk.denseCoordinates(b));
  auto r = r2TimesLower(f, k, Pk);
  if (r.empty() || h.empty()) return {};
  return subspaceIntersect(h, r);
}

}  // namespace

WindowReport windowSubmodule(const Frame& f, int k) {
  if (!inWindow(f.m(), f.n(), k))
    throw DomainError("window submodule needs M in -2N and 2 - M/2 <= k <= 2 - M");
  const int M = f.superdim();
  GradedSpace low = harmonics(f, 2 - M - k);
  Polynomial factor = rPower(f, k + M / 2 - 1);
  std::vector<Polynomial> basis;
  for (const auto& b : low.basis()) basis.push_back(factor * b);
  WindowReport rep;
  rep.space = GradedSpace(f.spec, k, std::move(basis));
  rep.dim = rep.space.dim();

  LinearOp lap = laplacian(f);
  rep.harmonic = true;
  for (const auto& b : rep.space.basis())
    if (!lap(b).isZero()) rep.harmonic = false;

  rep.invariant = true;
  for (const auto& g : ospGenerators(f))
    for (const auto& b : rep.space.basis())
      if (!rep.space.contains(g.op(b))) rep.invariant = false;

  auto inter = harmonicIntersection(f, k);
  rep.intersection_dim = inter.size();
  GradedSpace Pk = monomialBasisPk(f, k);
  bool inside = true;
  for (const auto& b : rep.space.basis())
    if (!contains(Pk.denseCoordinates(b), inter)) inside = false;
  rep.equals_intersection = inside && rep.intersection_dim == rep.dim;
  return rep;
}

MaximalityReport maximalityAndIndecomposability(const Frame& f, int k, std::uint64_t seed, std::size_t samples) {
  WindowReport w = windowSubmodule(f, k);
  GradedSpace H = harmonics(f, k);
  ModuleRealization mod = realize(H, ospGenerators(f));
  MaximalityReport rep;
  rep.dim = H.dim();
  rep.window_dim = w.dim;

  std::vector<SparseVec<std::size_t>> wcoords;
  for (const auto& b : w.space.basis()) wcoords.push_back(coordsOrThrow(H, b, "maximality"));

  for (std::size_t i = 0; i < H.dim(); ++i) {
    if (w.space.contains(H.at(i))) continue;
    ++rep.outside_checked;
    SparseVec<std::size_t> e{{i, Rational(1)}};
    auto c = invariantClosure({e}, mod);
    if (c.is_whole)
      ++rep.outside_whole;
    else if (rep.witness.empty())
      rep.witness = "closure of " + H.at(i).str() + " has dimension " + std::to_string(c.dim);
  }

  std::vector<SparseVec<std::size_t>> seeds;
  for (std::size_t i = 0; i < H.dim(); ++i) seeds.push_back({{i, Rational(1)}});
  for (auto& s : sampleVectors(H.dim(), samples, seed)) seeds.push_back(std::move(s));
  for (const auto& s : seeds) {
    ++rep.samples_checked;
    auto c = invariantClosure({s}, mod);
    SparseEchelon<std::size_t> ech;
    for (const auto& b : c.basis) ech.insert(b);
    bool all = true;
    for (const auto& wc : wcoords)
      if (!ech.contains(wc)) all = false;
    if (all)
      ++rep.samples_containing;
    else if (rep.witness.empty())
      rep.witness = "closure of " + H.combine(s).str() + " misses the window submodule";
  }
  rep.maximal = rep.outside_whole == rep.outside_checked;
  rep.indecomposable = rep.samples_containing == rep.samples_checked;
  return rep;
}

BigInt dimLk(int m, int n, int k) {
  if (m == 0) throw DomainError("dimension formula requires m != 0");
  if (!inWindow(m, n, k)) return dimHkFormula(m, n, k);
  const int M = m - 2 * n;
  BigInt d = dimHkFormula(m, n, k);
  for (int i = 0; i <= std::min(-M - k, 2 * n); ++i) d += binomial(2 * n, i) * binomial(2 * n - k - i - 1, m - 1);
  for (int i = 0; i <= std::min(2 - M - k, 2 * n); ++i) d -= binomial(2 * n, i) * binomial(2 * n - k - i + 1, m - 1);
  return d;
}

std::size_t dimLkQuotient(const Frame& f, int k) { return harmonics(f, k).dim() - harmonicIntersection(f, k).size(); }

std::string branchKindName(BranchKind k) {
  switch (k) {
    case BranchKind::Full: return "full";
    case BranchKind::Truncated: return "truncated";
    case BranchKind::NotCompletelyReducible: return "not completely reducible";
  }
  return "";
}

BranchReport branchLevels(int m, int n, int k) {
  if (m < 2) throw DomainError("branching needs m >= 2");
  const int M = m - 2 * n;
  BranchReport rep;
  rep.lmin = 0;
  rep.lmax = k;
  if (M <= 1 && (M % 2 != 0)) {
    if (2 * k >= 4 + 1 - M) {
      rep.kind = BranchKind::NotCompletelyReducible;
      rep.holds = true;
      rep.target = dimLk(m, n, k);
      return rep;
    }
  } else if (inWindow(m, n, k)) {
    rep.kind = BranchKind::Truncated;
    rep.lmin = 3 - M - k;
  }
  rep.target = dimLk(m, n, k);
  for (int l = rep.lmin; l <= rep.lmax; ++l) rep.sum += dimLk(m - 1, n, l);
  rep.holds = rep.sum == rep.target;
  return rep;
}

QuotientModule quotientModule(const Frame& f, int k) {
  QuotientModule q;
  SparseEchelon<Monomial> ech;
  std::vector<Polynomial> lower;
  if (k >= 2) {
    Polynomial r2 = rSquaredPoly(f);
    for (const auto& mono : enumerateMonomials(f, k - 2)) {
      lower.push_back(r2 * Polynomial::monomial(f.spec, mono));
      ech.insert(lower.back().terms());
    }
  }
  std::map<Monomial, std::size_t> index;
  for (const auto& mono : enumerateMonomials(f, k)) {
    auto r = ech.reduce(SparseVec<Monomial>{{mono, Rational(1)}});
    if (r.count(mono)) {
      index.emplace(mono, q.basis.size());
      q.basis.push_back(mono);
    }
  }
  auto toCoords = [&](const Terms& t) {
    SparseVec<std::size_t> v;
    for (const auto& [mono, c] : ech.reduce(t)) v.emplace(index.at(mono), c);
    return v;
  };
  auto gens = ospGenerators(f);
  q.module.dim = q.basis.size();
  q.well_defined = true;
  for (const auto& g : gens) {
    q.module.names.push_back(g.op.name());
    SparseMatrix A;
    for (const auto& mono : q.basis) A.push_back(toCoords(g.op(Polynomial::monomial(f.spec, mono)).terms()));
    q.module.matrices.push_back(std::move(A));
    for (const auto& p : lower)
      if (!ech.reduce(g.op(p).terms()).empty()) q.well_defined = false;
  }
  SparseEchelon<std::size_t> img;
  std::vector<SparseVec<std::size_t>> imgBasis;
  for (const auto& h : harmonics(f, k).basis()) {
    auto v = toCoords(h.terms());
    if (img.insert(v)) imgBasis.push_back(std::move(v));
  }
  q.harmonic_image_dim = img.rank();
  q.harmonic_image_invariant = true;
  for (const auto& A : q.module.matrices)
    for (const auto& v : imgBasis)
      if (!img.contains(applyMatrix(A, v))) q.harmonic_image_invariant = false;
  return q;
}

bool BigAlgebraReport::ok() const {
  return generators == expected && rank == expected && brackets_closed == brackets &&
         centralizer_ok == centralizer_checks;
}

BigAlgebraReport bigAlgebraClosure(int m, int n, int d, OscillatorForm form) {
  Frame f = Frame::superspace(m, n);
  const int N = f.size();
  const SpecPtr& spec = f.spec;
  auto bigParity = [&](int i) { return f.isFermionic(i) ? 0 : 1; };
  auto varName = [&](int i) { return spec->name(f.var(i)); };

  std::vector<LinearOp> gens;
  std::vector<LinearOp> X(static_cast<std::size_t>(N + 1)), D(static_cast<std::size_t>(N + 1));
  const bool twist = form == OscillatorForm::KleinTwisted;
  for (int i = 1; i <= N; ++i) {
    VarRef v = f.var(i);
    const bool klein = twist && f.isFermionic(i);
    X[i] = LinearOp(spec, varName(i), 1, bigParity(i), [v, klein](const Monomial& mono, const Rational& c, Terms& out) {
      Monomial r;
      long fac = 0;
      if (mulVarMonomial(v, mono, r, fac)) addTerm(out, r, c * Rational(klein ? kleinSign(mono) * fac : fac));
    });
    D[i] = LinearOp(spec, "d" + varName(i), -1, bigParity(i), [v, klein](const Monomial& mono, const Rational& c, Terms& out) {
      Monomial r;
      long fac = 0;
      if (derivMonomial(mono, v, r, fac)) addTerm(out, r, c * Rational(klein ? kleinSign(mono) * fac : fac));
    });
  }
  auto withParity = [](const LinearOp& op, int parity) {
    return LinearOp(op.spec(), op.name(), op.shift(), parity & 1,
                    [op](const Monomial& mono, const Rational& c, Terms& out) { op.applyTo(mono, c, out); });
  };
  for (int i = 1; i <= N; ++i) gens.push_back(X[i]);
  for (int i = 1; i <= N; ++i) gens.push_back(D[i]);
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j) {
      if (i == j && f.isFermionic(i)) continue;
      gens.push_back(withParity(compose(X[i], X[j]).renamed(varName(i) + varName(j)), bigParity(i) + bigParity(j)));
      gens.push_back(
          withParity(compose(D[i], D[j]).renamed("d" + varName(i) + "d" + varName(j)), bigParity(i) + bigParity(j)));
    }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      LinearOp e = compose(X[i], D[j]);
      if (i == j) e = e + Rational::fraction(f.isFermionic(i) ? -1 : 1, 2) * LinearOp::identity(spec);
      gens.push_back(withParity(e.renamed(varName(i) + "d" + varName(j)), bigParity(i) + bigParity(j)));
    }

  std::vector<Monomial> domain;
  for (int k = 0; k <= d; ++k)
    for (const auto& mono : enumerateMonomials(f, k)) domain.push_back(mono);
  using Key = std::pair<std::size_t, Monomial>;
  auto flatten = [&](const LinearOp& op) {
    SparseVec<Key> v;
    for (std::size_t idx = 0; idx < domain.size(); ++idx) {
      Terms img;
      op.applyTo(domain[idx], Rational(1), img);
      for (auto& [mono, c] : img) v.emplace(Key{idx, mono}, c);
    }
    return v;
  };

  BigAlgebraReport rep;
  rep.form = form;
  rep.generators = gens.size();
  rep.expected = static_cast<std::size_t>((4 * n + 1) * 4 * n / 2 + m * (2 * m + 1) + 2 * m * (4 * n + 1));
  SparseEchelon<Key> span;
  for (const auto& g : gens) span.insert(flatten(g));
  rep.rank = span.rank();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) {
      ++rep.brackets;
      if (span.contains(flatten(supercommutator(gens[a], gens[b]))))
        ++rep.brackets_closed;
      else if (rep.witness.empty())
        rep.witness = "[" + gens[a].name() + ", " + gens[b].name() + "] leaves the span";
    }

  LinearOp shiftedEuler = euler(f) + Rational::fraction(f.superdim(), 2) * LinearOp::identity(spec);
  std::vector<LinearOp> sl2{laplacian(f), rSquared(f), shiftedEuler};
  for (const auto& L : ospGenerators(f))
    for (const auto& A : sl2) {
      ++rep.centralizer_checks;
      LinearOp c = compose(L.op, A) - compose(A, L.op);
      bool ok = true;
      for (const auto& mono : domain) {
        Terms img;
        c.applyTo(mono, Rational(1), img);
        if (!img.empty()) ok = false;
      }
      if (ok)
        ++rep.centralizer_ok;
      else if (rep.witness.empty())
        rep.witness = "[" + L.op.name() + ", " + A.name() + "] != 0";
    }
  return rep;
}

}  // namespace superharm
