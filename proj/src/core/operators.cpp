#include "operators.hpp"

namespace superharm {

namespace {

void addScaled(Terms& out, const Monomial& m, const Rational& c) {
  if (c.isZero()) return;
  auto [it, fresh] = out.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.isZero()) out.erase(it);
  }
}

}  // namespace

Metric Metric::of(int m, int n) {
  Metric mt;
  mt.m = m;
  mt.n = n;
  const auto N = static_cast<std::size_t>(m + 2 * n);
  mt.g = RatMatrix(N, N);
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) mt.g.at(i, i) = 1;
  for (int p = 0; p < n; ++p) {
    auto a = static_cast<std::size_t>(m + 2 * p);
    mt.g.at(a, a + 1) = Rational::fraction(-1, 2);
    mt.g.at(a + 1, a) = Rational::fraction(1, 2);
  }
  auto inv = inverse(mt.g);
  if (!inv) throw DomainError("Metric: singular");
  mt.g_inv = *inv;
  return mt;
}

// ---------------------------------------------------------------------------

LinearOp LinearOp::identity(SpecPtr spec) {
  return LinearOp(std::move(spec), "id", 0, 0,
                  [](const Monomial& mono, const Rational& c, Terms& out) { addScaled(out, mono, c); });
}

LinearOp LinearOp::multiplication(const Polynomial& p, std::string name) {
  int shift = p.homogeneousDegree();
  int parity = p.parity();
  auto terms = p.terms();
  return LinearOp(p.spec(), std::move(name), shift < 0 ? 0 : shift, parity < 0 ? 0 : parity,
                  [terms](const Monomial& mono, const Rational& c, Terms& out) {
                    Monomial prod;
                    int sign = 0;
                    for (const auto& [pm, pc] : terms)
                      if (mulMonomials(pm, mono, prod, sign)) {
                        Rational v = c * pc;
                        addScaled(out, prod, sign > 0 ? v : -v);
                      }
                  });
}

LinearOp LinearOp::renamed(std::string name) const {
  LinearOp r = *this;
  r.name_ = std::move(name);
  return r;
}

Polynomial LinearOp::operator()(const Polynomial& f) const {
  Terms out;
  for (const auto& [m, c] : f.terms()) kernel_(m, c, out);
  return Polynomial(f.spec() ? f.spec() : spec_, std::move(out));
}

LinearOp compose(const LinearOp& a, const LinearOp& b) {
  auto ka = a.kernel_, kb = b.kernel_;
  return LinearOp(a.spec_, a.name_ + "*" + b.name_, a.shift_ + b.shift_, (a.parity_ + b.parity_) & 1,
                  [ka, kb](const Monomial& mono, const Rational& c, Terms& out) {
                    Terms mid;
                    kb(mono, c, mid);
                    for (const auto& [mm, mc] : mid) ka(mm, mc, out);
                  });
}

LinearOp operator+(const LinearOp& a, const LinearOp& b) {
  auto ka = a.kernel_, kb = b.kernel_;
  return LinearOp(a.spec_, "(" + a.name_ + "+" + b.name_ + ")", a.shift_, a.parity_,
                  [ka, kb](const Monomial& mono, const Rational& c, Terms& out) {
                    ka(mono, c, out);
                    kb(mono, c, out);
                  });
}

LinearOp operator-(const LinearOp& a, const LinearOp& b) { return a + Rational(-1) * b; }

LinearOp operator*(const Rational& s, const LinearOp& a) {
  auto ka = a.kernel_;
  return LinearOp(a.spec_, s.str() + "*" + a.name_, a.shift_, a.parity_,
                  [ka, s](const Monomial& mono, const Rational& c, Terms& out) { ka(mono, c * s, out); });
}

LinearOp supercommutator(const LinearOp& a, const LinearOp& b) {
  auto ka = a.kernel_, kb = b.kernel_;
  Rational sign = (a.parity_ & b.parity_) ? Rational(1) : Rational(-1);
  return LinearOp(a.spec_, "[" + a.name_ + "," + b.name_ + "]", a.shift_ + b.shift_,
                  (a.parity_ + b.parity_) & 1, [ka, kb, sign](const Monomial& mono, const Rational& c, Terms& out) {
                    Terms mid;
                    kb(mono, c, mid);
                    for (const auto& [mm, mc] : mid) ka(mm, mc, out);
                    mid.clear();
                    ka(mono, c, mid);
                    for (const auto& [mm, mc] : mid) kb(mm, mc * sign, out);
                  });
}

// ---------------------------------------------------------------------------

namespace {

int localParity(const Frame& f, int i) { return f.isFermionic(i) ? 1 : 0; }

/// sum c * d_a d_b (d_b applied first)
LinearOp secondOrder(const Frame& f, std::vector<std::tuple<VarRef, VarRef, Rational>> terms, std::string name) {
  return LinearOp(f.spec, std::move(name), -2, 0,
                  [terms = std::move(terms)](const Monomial& mono, const Rational& c, Terms& out) {
                    Monomial m1, m2;
                    long f1 = 0, f2 = 0;
                    for (const auto& [a, b, w] : terms)
                      if (derivMonomial(mono, b, m1, f1) && derivMonomial(m1, a, m2, f2))
                        addScaled(out, m2, c * w * Rational(f1 * f2));
                  });
}

/// Degree of a monomial in the frame's variables of the given class.
int frameDegree(const Frame& f, const Monomial& mono, VarClass which) {
  int d = 0;
  if (which != VarClass::Fermionic)
    for (int i = 0; i < f.m(); ++i) d += mono.exps[static_cast<std::size_t>(f.spec->bosOffset(f.block) + i)];
  if (which != VarClass::Bosonic) {
    std::uint64_t mask = ((1ULL << (2 * f.n())) - 1) << f.spec->fermOffset(f.block);
    d += std::popcount(mono.fermions & mask);
  }
  return d;
}

}  // namespace

LinearOp vectorField(const Frame& f, const RatMatrix& C, std::string name) {
  const int N = f.size();
  struct Entry {
    VarRef a;
    Rational c;
  };
  std::vector<std::pair<VarRef, std::vector<Entry>>> cols;
  int parity = -1;
  for (int b = 0; b < N; ++b) {
    std::vector<Entry> entries;
    for (int a = 0; a < N; ++a) {
      const Rational& c = C.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      if (c.isZero()) continue;
      entries.push_back({f.var(a + 1), c});
      int p = (localParity(f, a + 1) + localParity(f, b + 1)) & 1;
      if (parity == -1) parity = p;
      else if (parity != p) parity = 0;
    }
    if (!entries.empty()) cols.emplace_back(f.var(b + 1), std::move(entries));
  }
  return LinearOp(f.spec, std::move(name), 0, parity < 0 ? 0 : parity,
                  [cols = std::move(cols)](const Monomial& mono, const Rational& c, Terms& out) {
                    Monomial m1, m2;
                    long f1 = 0, f2 = 0;
                    for (const auto& [vb, entries] : cols) {
                      if (!derivMonomial(mono, vb, m1, f1)) continue;
                      for (const auto& e : entries)
                        if (mulVarMonomial(e.a, m1, m2, f2)) addScaled(out, m2, c * e.c * Rational(f1 * f2));
                    }
                  });
}

LinearOp laplacianBosonic(const Frame& f) {
  std::vector<std::tuple<VarRef, VarRef, Rational>> t;
  for (int i = 1; i <= f.m(); ++i) t.emplace_back(f.var(i), f.var(i), Rational(1));
  return secondOrder(f, std::move(t), "lap_b");
}

LinearOp laplacianFermionic(const Frame& f) {
  std::vector<std::tuple<VarRef, VarRef, Rational>> t;
  for (int j = 1; j <= f.n(); ++j)
    t.emplace_back(f.var(f.m() + 2 * j - 1), f.var(f.m() + 2 * j), Rational(-4));
  return secondOrder(f, std::move(t), "lap_f");
}

LinearOp laplacian(const Frame& f) {
  std::vector<std::tuple<VarRef, VarRef, Rational>> t;
  for (int i = 1; i <= f.m(); ++i) t.emplace_back(f.var(i), f.var(i), Rational(1));
  for (int j = 1; j <= f.n(); ++j)
    t.emplace_back(f.var(f.m() + 2 * j - 1), f.var(f.m() + 2 * j), Rational(-4));
  return secondOrder(f, std::move(t), "lap");
}

Polynomial rSquaredBosonicPoly(const Frame& f) {
  Polynomial p(f.spec);
  for (int i = 1; i <= f.m(); ++i) {
    auto x = Polynomial::variable(f.spec, f.var(i));
    p += x * x;
  }
  return p;
}

Polynomial thetaSquaredPoly(const Frame& f) {
  Polynomial p(f.spec);
  for (int j = 1; j <= f.n(); ++j)
    p -= Polynomial::variable(f.spec, f.var(f.m() + 2 * j - 1)) * Polynomial::variable(f.spec, f.var(f.m() + 2 * j));
  return p;
}

Polynomial rSquaredPoly(const Frame& f) { return rSquaredBosonicPoly(f) + thetaSquaredPoly(f); }

LinearOp rSquared(const Frame& f) { return LinearOp::multiplication(rSquaredPoly(f), "R2"); }

LinearOp euler(const Frame& f) {
  return vectorField(f, RatMatrix::identity(static_cast<std::size_t>(f.size())), "E");
}

LinearOp eulerBosonic(const Frame& f) {
  RatMatrix C(static_cast<std::size_t>(f.size()), static_cast<std::size_t>(f.size()));
  for (int i = 0; i < f.m(); ++i) C.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
  return vectorField(f, C, "E_b");
}

LinearOp eulerFermionic(const Frame& f) {
  RatMatrix C(static_cast<std::size_t>(f.size()), static_cast<std::size_t>(f.size()));
  for (int i = f.m(); i < f.size(); ++i) C.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
  return vectorField(f, C, "E_f");
}

LinearOp laplaceBeltrami(const Frame& f, LBPart part) {
  Polynomial r2 = part == LBPart::Full       ? rSquaredPoly(f)
                  : part == LBPart::Bosonic  ? rSquaredBosonicPoly(f)
                                             : thetaSquaredPoly(f);
  LinearOp lap = part == LBPart::Full ? laplacian(f) : part == LBPart::Bosonic ? laplacianBosonic(f) : laplacianFermionic(f);
  int dim = part == LBPart::Full ? f.superdim() : part == LBPart::Bosonic ? f.m() : -2 * f.n();
  VarClass cls = part == LBPart::Full ? VarClass::All : part == LBPart::Bosonic ? VarClass::Bosonic : VarClass::Fermionic;
  // E(dim - 2 + E) is diagonal on monomials.
  LinearOp diag(f.spec, "E(M-2+E)", 0, 0, [f, dim, cls](const Monomial& mono, const Rational& c, Terms& out) {
    int d = frameDegree(f, mono, cls);
    addScaled(out, mono, c * Rational(static_cast<long>(d) * (dim - 2 + d)));
  });
  const char* name = part == LBPart::Full ? "LB" : part == LBPart::Bosonic ? "LB_b" : "LB_f";
  return (compose(LinearOp::multiplication(r2, "r2"), lap) - diag).renamed(name);
}

LinearOp ospGenerator(const Frame& f, const Metric& g, int i, int j) {
  const int N = f.size();
  if (i < 1 || j < 1 || i > N || j > N) throw DomainError("ospGenerator: index out of range");
  const auto n = static_cast<std::size_t>(N);
  RatMatrix C(n, n);
  Rational s = (localParity(f, i) & localParity(f, j)) ? Rational(-1) : Rational(1);
  for (std::size_t b = 0; b < n; ++b) {
    C.at(static_cast<std::size_t>(i - 1), b) += g.g_inv.at(static_cast<std::size_t>(j - 1), b);
    C.at(static_cast<std::size_t>(j - 1), b) -= s * g.g_inv.at(static_cast<std::size_t>(i - 1), b);
  }
  LinearOp op = vectorField(f, C, "L" + std::to_string(i) + "," + std::to_string(j));
  return LinearOp(f.spec, op.name(), 0, (localParity(f, i) + localParity(f, j)) & 1,
                  [op](const Monomial& mono, const Rational& c, Terms& out) { op.applyTo(mono, c, out); });
}

std::vector<IndexedOp> ospGenerators(const Frame& f) {
  Metric g = Metric::of(f);
  std::vector<IndexedOp> out;
  for (int i = 1; i <= f.size(); ++i)
    for (int j = i; j <= f.size(); ++j) {
      if (i == j && !f.isFermionic(i)) continue;
      out.push_back({i, j, ospGenerator(f, g, i, j)});
    }
  return out;
}

LinearOp glGenerator(const Frame& f, int i, int j) {
  const auto n = static_cast<std::size_t>(f.size());
  if (i < 1 || j < 1 || i > f.size() || j > f.size()) throw DomainError("glGenerator: index out of range");
  RatMatrix C(n, n);
  C.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
  LinearOp op = vectorField(f, C, "E" + std::to_string(i) + "," + std::to_string(j));
  return LinearOp(f.spec, op.name(), 0, (localParity(f, i) + localParity(f, j)) & 1,
                  [op](const Monomial& mono, const Rational& c, Terms& out) { op.applyTo(mono, c, out); });
}

LinearOp casimirForm(const Frame& f, RaisedIndex reading) {
  Metric g = Metric::of(f);
  const RatMatrix& G = reading == RaisedIndex::MetricEntries ? g.g : g.g_inv;
  const int N = f.size();
  std::vector<std::vector<LinearOp>> L(static_cast<std::size_t>(N));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) L[static_cast<std::size_t>(i - 1)].push_back(ospGenerator(f, g, i, j));

  struct Term {
    Rational w;
    LinearOp a, b;
  };
  std::vector<Term> terms;
  const Rational half = Rational::fraction(-1, 2);
  for (int i = 0; i < N; ++i)
    for (int l = 0; l < N; ++l) {
      const Rational& gil = G.at(static_cast<std::size_t>(i), static_cast<std::size_t>(l));
      if (gil.isZero()) continue;
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
          const Rational& gjk = G.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
          if (gjk.isZero()) continue;
          terms.push_back({half * gil * gjk, L[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                           L[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]});
        }
    }
  return LinearOp(f.spec, "casimir", 0, 0, [terms = std::move(terms)](const Monomial& mono, const Rational& c, Terms& out) {
    Terms mid;
    for (const auto& t : terms) {
      mid.clear();
      t.b.applyTo(mono, c * t.w, mid);
      for (const auto& [mm, mc] : mid) t.a.applyTo(mm, mc, out);
    }
  });
}

Polynomial innerProduct(const Frame& x, const Frame& y) {
  if (x.m() != y.m() || x.n() != y.n()) throw DomainError("innerProduct: block shapes differ");
  Metric g = Metric::of(x);
  Polynomial p(x.spec);
  for (int i = 1; i <= x.size(); ++i)
    for (int j = 1; j <= x.size(); ++j) {
      const Rational& c = g.g.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      if (!c.isZero())
        p += c * (Polynomial::variable(x.spec, x.var(i)) * Polynomial::variable(x.spec, y.var(j)));
    }
  return p;
}

std::vector<SparseVec<std::size_t>> sparseMatrixOf(const LinearOp& op, const GradedSpace& domain,
                                                   const GradedSpace& target) {
  std::vector<SparseVec<std::size_t>> cols;
  cols.reserve(domain.dim());
  for (std::size_t j = 0; j < domain.dim(); ++j) {
    Polynomial img = op(domain.at(j));
    auto c = target.coordinates(img);
    if (!c) throw DomainError("matrixOf: image of basis vector " + std::to_string(j) + " under " + op.name() +
                              " is outside the target space");
    cols.push_back(std::move(*c));
  }
  return cols;
}

RatMatrix matrixOf(const LinearOp& op, const GradedSpace& domain, const GradedSpace& target) {
  auto cols = sparseMatrixOf(op, domain, target);
  RatMatrix M(target.dim(), domain.dim());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, v] : cols[j]) M.at(i, j) = v;
  return M;
}

std::optional<std::size_t> firstDifference(const LinearOp& a, const LinearOp& b, const GradedSpace& domain) {
  for (std::size_t j = 0; j < domain.dim(); ++j)
    if (a(domain.at(j)) != b(domain.at(j))) return j;
  return std::nullopt;
}

}  // namespace superharm
