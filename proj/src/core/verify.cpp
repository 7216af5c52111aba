#include "verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace superharm {

namespace {

bool nonpositiveEven(int M) { return M <= 0 && M % 2 == 0; }

class Recorder {
 public:
  Recorder(std::string group, std::string name, int m = -1, int n = -1, int k = -1) {
    r_.group = std::move(group);
    r_.name = std::move(name);
    r_.m = m;
    r_.n = n;
    r_.k = k;
  }
  template <class W>
  void test(bool ok, W&& witness) {
    ++r_.cases;
    if (ok) return;
    ++r_.failures;
    if (r_.witness.empty()) r_.witness = witness();
  }
  void fail(const std::string& witness) {
    test(false, [&] { return witness; });
  }
  void note(std::string s) { r_.note = std::move(s); }
  CheckResult done() { return std::move(r_); }

 private:
  CheckResult r_;
};

std::string opDiff(const LinearOp& a, const LinearOp& b, const GradedSpace& domain) {
  auto d = firstDifference(a, b, domain);
  return d ? domain.at(*d).str() : std::string();
}

Polynomial monoPoly(const Frame& f, const Monomial& m) { return Polynomial::monomial(f.spec, m); }

std::vector<Monomial> monomialsUpTo(const Frame& f, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k)
    for (const auto& m : enumerateMonomials(f, k)) out.push_back(m);
  return out;
}

int kmaxOr(const VerifyOptions& o, int dflt) { return o.kmax >= 0 ? o.kmax : dflt; }

LinearOp commutator(const LinearOp& a, const LinearOp& b) { return compose(a, b) - compose(b, a); }

}  // namespace

bool SuiteResult::pass() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass() ? 0 : 1;
  return n;
}

void SuiteResult::append(const SuiteResult& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

Grid defaultGrid() { return {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}, {4, 2}, {6, 2}}; }

Grid parseGrid(const std::string& text) {
  if (text.empty() || text == "default") return defaultGrid();
  Grid g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("grid entry '" + item + "' is not of the form m:n", 0);
    try {
      std::size_t used = 0;
      int m = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("m");
      std::string rest = item.substr(colon + 1);
      int n = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("n");
      if (m < 0 || n < 0 || m > 12 || 2 * n > 12) throw std::out_of_range("size");
      g.push_back({m, n});
    } catch (const std::exception&) {
      throw ParseError("grid entry '" + item + "' is not a valid m:n pair", 0);
    }
  }
  if (g.empty()) throw ParseError("empty grid", 0);
  return g;
}

// ---------------------------------------------------------------------------

SuiteResult verifySl2(const VerifyOptions& o) {
  SuiteResult s{"sl2", {}};
  for (auto [m, n] : o.grid) {
    Frame f = Frame::superspace(m, n);
    const int M = f.superdim();
    LinearOp lap = laplacian(f), r2 = rSquared(f), E = euler(f), id = LinearOp::identity(f.spec);
    LinearOp rhs1 = Rational(4) * E + Rational(2 * M) * id;
    LinearOp rhs2 = Rational(2) * lap;
    LinearOp rhs3 = Rational(-2) * r2;
    for (int k = 0; k <= kmaxOr(o, 6); ++k) {
      GradedSpace P = monomialBasisPk(f, k);
      Recorder rec("sl2", "[lap,R^2]=4E+2M, [lap,E]=2lap, [R^2,E]=-2R^2", m, n, k);
      std::string w;
      w = opDiff(commutator(lap, r2), rhs1, P);
      rec.test(w.empty(), [&] { return "[lap,R^2] on " + w; });
      w = opDiff(commutator(lap, E), rhs2, P);
      rec.test(w.empty(), [&] { return "[lap,E] on " + w; });
      w = opDiff(commutator(r2, E), rhs3, P);
      rec.test(w.empty(), [&] { return "[R^2,E] on " + w; });
      s.checks.push_back(rec.done());
    }
  }
  return s;
}

SuiteResult verifyInvariance(const VerifyOptions& o) {
  SuiteResult s{"invariance", {}};
  for (auto [m, n] : o.grid) {
    Frame f = Frame::superspace(m, n);
    auto gens = ospGenerators(f);
    LinearOp lap = laplacian(f), r2 = rSquared(f), E = euler(f);
    for (int k = 0; k <= std::min(kmaxOr(o, 6), 4); ++k) {
      GradedSpace P = monomialBasisPk(f, k);
      Recorder rec("invariance", "L_ij commute with lap, R^2, E", m, n, k);
      for (const auto& g : gens) {
        for (const auto* A : {&lap, &r2, &E}) {
          std::string w = opDiff(compose(g.op, *A), compose(*A, g.op), P);
          rec.test(w.empty(), [&] { return "[" + g.op.name() + "," + A->name() + "] on " + w; });
        }
      }
      s.checks.push_back(rec.done());

      if (m == 0) continue;
      GradedSpace H = harmonics(f, k);
      Recorder inv("invariance", "L_ij map H_k into H_k", m, n, k);
      for (const auto& g : gens)
        for (const auto& b : H.basis()) {
          Polynomial img = g.op(b);
          inv.test(H.contains(img), [&] { return g.op.name() + " applied to " + b.str(); });
        }
      s.checks.push_back(inv.done());

      if (k <= 2) {
        Recorder br("invariance", "brackets of generator matrices stay in their span on H_k", m, n, k);
        ModuleRealization mod = realize(H, gens);
        using Key = std::pair<std::size_t, std::size_t>;
        auto flatten = [](const SparseMatrix& A) {
          SparseVec<Key> v;
          for (std::size_t j = 0; j < A.size(); ++j)
            for (const auto& [i, c] : A[j]) v.emplace(Key{j, i}, c);
          return v;
        };
        SparseEchelon<Key> span;
        for (const auto& A : mod.matrices) span.insert(flatten(A));
        for (std::size_t a = 0; a < gens.size(); ++a)
          for (std::size_t b = a; b < gens.size(); ++b) {
            SparseMatrix C = sparseMatrixOf(supercommutator(gens[a].op, gens[b].op), H, H);
            br.test(span.contains(flatten(C)),
                    [&] { return "[" + gens[a].op.name() + "," + gens[b].op.name() + "] leaves the span"; });
          }
        s.checks.push_back(br.done());
      }

      if (H.dim() <= 25 && k <= 3) {
        Recorder sk("invariance", "super-skew pairing with the supersphere bilinear form on H_k", m, n, k);
        for (const auto& g : gens)
          for (const auto& a : H.basis()) {
            int pa = a.parity();
            if (pa < 0) {
              sk.fail("basis vector without definite parity: " + a.str());
              continue;
            }
            Polynomial La = g.op(a);
            for (const auto& b : H.basis()) {
              ScaledScalar lhs = sphereBilinear(La, b, f);
              ScaledScalar rhs = sphereBilinear(a, g.op(b), f);
              Rational sign((g.op.parity() * pa) % 2 ? -1 : 1);
              bool ok = (lhs + sign * rhs).coeff.isZero();
              sk.test(ok, [&] { return g.op.name() + " on (" + a.str() + ", " + b.str() + ")"; });
            }
          }
        s.checks.push_back(sk.done());
      }
    }
  }
  return s;
}

SuiteResult verifyCasimir(const VerifyOptions& o) {
  SuiteResult s{"casimir", {}};
  for (auto [m, n] : o.grid) {
    if (m + 2 * n > 8) continue;
    Frame f = Frame::superspace(m, n);
    LinearOp lb = laplaceBeltrami(f), cas = casimirForm(f, RaisedIndex::MetricEntries);
    LinearOp alt = casimirForm(f, RaisedIndex::InverseEntries);
    for (int k = 0; k <= std::min(kmaxOr(o, 4), 4); ++k) {
      GradedSpace P = monomialBasisPk(f, k);
      Recorder rec("casimir", "-1/2 sum L_ij g^il g^jk L_kl equals Delta_LB on P_k", m, n, k);
      std::string w = opDiff(cas, lb, P);
      rec.test(w.empty(), [&] { return "differs on " + w; });
      std::string wa = opDiff(alt, lb, P);
      rec.note(wa.empty() ? "inverse-metric reading also agrees"
                          : "inverse-metric reading differs on " + wa);
      s.checks.push_back(rec.done());
    }
  }
  return s;
}

SuiteResult verifyDims(const VerifyOptions& o) {
  SuiteResult s{"dims", {}};
  {
    Recorder spot("dims", "spot values dim H_2(3|0) = 5, dim H_2(2|1) = 7");
    std::size_t a = harmonics(Frame::superspace(3, 0), 2).dim(), b = harmonics(Frame::superspace(2, 1), 2).dim();
    spot.test(a == 5, [&] { return "dim H_2(3|0) = " + std::to_string(a); });
    spot.test(b == 7, [&] { return "dim H_2(2|1) = " + std::to_string(b); });
    s.checks.push_back(spot.done());
  }
  for (auto [m, n] : o.grid) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    for (int k = 0; k <= kmaxOr(o, 8); ++k) {
      Recorder rec("dims", "nullspace dimension of lap on P_k equals the binomial formula", m, n, k);
      std::size_t got = harmonics(f, k).dim();
      BigInt want = dimHkFormula(m, n, k);
      rec.test(BigInt(got) == want, [&] { return "nullspace " + std::to_string(got) + ", formula " + want.get_str(); });
      std::size_t pk = enumerateMonomials(f, k).size();
      rec.test(BigInt(pk) == dimPk(m, n, k), [&] { return "dim P_k = " + std::to_string(pk); });
      s.checks.push_back(rec.done());
    }
  }
  return s;
}

SuiteResult verifyFischer(const VerifyOptions& o) {
  SuiteResult s{"fischer", {}};
  for (auto [m, n] : o.grid) {
    Frame f = Frame::superspace(m, n);
    const int M = f.superdim();
    for (int k = 0; k <= kmaxOr(o, 6); ++k) {
      Recorder rec("fischer", "P_k is the direct sum of R^{2j} H_{k-2j}", m, n, k);
      std::size_t pk = enumerateMonomials(f, k).size();
      if (m != 0 && nonpositiveEven(M)) {
        bool threw = false;
        try {
          fischer(f, k);
        } catch (const DomainError&) {
          threw = true;
        }
        rec.test(threw, [] { return std::string("Fischer decomposition accepted M in -2N"); });
        // the sum of the would-be pieces is not direct or not everything
        SparseEchelon<Monomial> ech;
        std::size_t total = 0;
        Polynomial r2 = rSquaredPoly(f);
        for (int j = 0; 2 * j <= k; ++j)
          for (const auto& h : harmonics(f, k - 2 * j).basis()) {
            ech.insert((r2.pow(j) * h).terms());
            ++total;
          }
        rec.note("obstruction flagged; pieces have total dimension " + std::to_string(total) + " and span rank " +
                 std::to_string(ech.rank()) + " of dim P_k = " + std::to_string(pk));
        s.checks.push_back(rec.done());
        continue;
      }
      auto pieces = fischer(f, k);
      SparseEchelon<Monomial> ech;
      std::size_t total = 0;
      for (const auto& p : pieces)
        for (const auto& b : p.space.basis()) {
          ech.insert(b.terms());
          ++total;
        }
      rec.test(total == pk && ech.rank() == pk, [&] {
        return "pieces total " + std::to_string(total) + ", rank " + std::to_string(ech.rank()) + ", dim P_k " +
               std::to_string(pk);
      });
      s.checks.push_back(rec.done());
    }
  }
  return s;
}

SuiteResult verifyDecomp(const VerifyOptions& o) {
  SuiteResult s{"decomp", {}};
  for (auto [m, n] : o.grid) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    LinearOp lap = laplacian(f);
    for (int k = 0; k <= kmaxOr(o, 6); ++k) {
      Recorder rec("decomp", "H_k is the direct sum of f_{l,p,q} H^b_p H^f_q", m, n, k);
      GradedSpace H = harmonics(f, k);
      HkDecomposition d = decomposition(f, k);
      std::size_t total = 0;
      for (const auto& c : d.components) {
        total += c.space.dim();
        for (const auto& b : c.space.basis())
          rec.test(lap(b).isZero(), [&] {
            return "component (l,p,q)=(" + std::to_string(c.l) + "," + std::to_string(c.p) + "," +
                   std::to_string(c.q) + ") vector not harmonic: " + b.str();
          });
      }
      rec.test(total == H.dim(),
               [&] { return "component dimensions sum to " + std::to_string(total) + ", dim H_k " + std::to_string(H.dim()); });
      try {
        for (const auto& b : H.basis())
          rec.test(d.joint.contains(b), [&] { return "harmonic outside the component span: " + b.str(); });
      } catch (const DomainError& e) {
        rec.fail(std::string("component bases are dependent: ") + e.what());
      }
      s.checks.push_back(rec.done());
    }
    // L_{1,m+1} f_{k,p,q} = 2k(M/2+p+q+k-1) f_{k-1,p+1,q+1} x1 e1
    if (n >= 1) {
      Recorder lf("decomp", "L_{1,m+1} f_{k,p,q} = 2k(M/2+p+q+k-1) f_{k-1,p+1,q+1} x1 e1", m, n);
      LinearOp L = ospGenerator(f, Metric::of(f), 1, m + 1);
      Polynomial x1e1 = Polynomial::variable(f.spec, f.var(1)) * Polynomial::variable(f.spec, f.var(m + 1));
      for (int q = 0; q < n; ++q)
        for (int kk = 1; kk <= std::min(2, n - q); ++kk)
          for (int p = 0; p <= 2; ++p) {
            Rational c = Rational(2 * kk) * (Rational::fraction(f.superdim(), 2) + Rational(p + q + kk - 1));
            Polynomial lhs = L(fkpq(f, kk, p, q));
            Polynomial rhs = c * (fkpq(f, kk - 1, p + 1, q + 1) * x1e1);
            lf.test((lhs - rhs).isZero(), [&] {
              return "(k,p,q)=(" + std::to_string(kk) + "," + std::to_string(p) + "," + std::to_string(q) + ")";
            });
          }
      s.checks.push_back(lf.done());
    }
  }
  return s;
}

SuiteResult verifyProjectors(const VerifyOptions& o) {
  SuiteResult s{"projectors", {}};
  std::mt19937_64 rng(o.seed);
  for (auto [m, n] : o.grid) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    for (int k = 0; k <= kmaxOr(o, 6); ++k) {
      HkDecomposition d = decomposition(f, k);
      if (d.components.empty()) continue;
      const std::size_t dim = d.joint.dim(), nc = d.components.size();
      if (m == 1) {
        Recorder rec("projectors", "component split (projector formula has colliding eigenvalues at m = 1)", m, n, k);
        bool collided = false;
        for (const auto& c : d.components) try {
            projector(f, k, c.l, c.q);
          } catch (const EigenvalueCollision&) {
            collided = true;
          }
        if (collided) rec.note("projector formula raised an eigenvalue collision; split used instead");
        for (const auto& v : sampleVectors(dim, 3, rng())) {
          Polynomial p = d.joint.combine(v);
          auto parts = d.split(p);
          Polynomial sum(f.spec);
          for (std::size_t c = 0; c < nc; ++c) {
            sum += parts[c];
            rec.test(parts[c].isZero() || d.components[c].space.contains(parts[c]),
                     [&] { return "split part outside its component for " + p.str(); });
          }
          rec.test((sum - p).isZero(), [&] { return "split parts do not add up for " + p.str(); });
        }
        s.checks.push_back(rec.done());
        continue;
      }
      Recorder rec("projectors", "Q^k_{r,s} idempotent, mutually orthogonal and complete on H_k", m, n, k);
      // Matrices of the two Laplace-Beltrami parts in the component basis, then
      // the product formula evaluated on them.
      auto Mb = sparseMatrixOf(laplaceBeltrami(f, LBPart::Bosonic), d.joint, d.joint);
      auto Mf = sparseMatrixOf(laplaceBeltrami(f, LBPart::Fermionic), d.joint, d.joint);
      auto factor = [&](const SparseMatrix& A, const Rational& shift, const Rational& inv) {
        SparseMatrix B = A;
        for (std::size_t j = 0; j < dim; ++j) {
          axpy(B[j], shift, SparseVec<std::size_t>{{j, Rational(1)}});
          for (auto& [i, c] : B[j]) c *= inv;
        }
        return B;
      };
      auto mul = [&](const SparseMatrix& A, const SparseMatrix& B) {
        SparseMatrix C(dim);
        for (std::size_t j = 0; j < dim; ++j) C[j] = applyMatrix(A, B[j]);
        return C;
      };
      std::vector<SparseMatrix> Q;
      bool formulaOk = true;
      for (const auto& c : d.components) {
        const int p = c.p, sq = c.q;
        SparseMatrix q(dim);
        for (std::size_t j = 0; j < dim; ++j) q[j] = {{j, Rational(1)}};
        for (int i = 0; i <= k; ++i) {
          if (i == p) continue;
          long den = static_cast<long>(i - p) * (i + p + m - 2);
          if (den == 0) {
            formulaOk = false;
            break;
          }
          q = mul(factor(Mb, Rational(static_cast<long>(i) * (m - 2 + i)), Rational::fraction(1, den)), q);
        }
        for (int j = 0; j <= std::min(n, k); ++j) {
          if (j == sq) continue;
          long den = static_cast<long>(j - sq) * (j + sq - 2 * n - 2);
          q = mul(factor(Mf, Rational(static_cast<long>(j) * (-2 * n - 2 + j)), Rational::fraction(1, den)), q);
        }
        Q.push_back(std::move(q));
      }
      rec.test(formulaOk, [] { return std::string("bosonic eigenvalue collision"); });
      if (formulaOk) {
        for (std::size_t a = 0; a < nc; ++a)
          for (std::size_t j = 0; j < dim; ++j) {
            // Q_a e_j = e_j if j lies in component a, else 0: idempotent, orthogonal, complete.
            SparseVec<std::size_t> want;
            if (d.owner[j] == a) want.emplace(j, Rational(1));
            rec.test(Q[a][j] == want, [&] {
              const auto& c = d.components[a];
              return "Q_{" + std::to_string(c.l) + "," + std::to_string(c.q) + "} on " + d.joint.at(j).str();
            });
          }
        SparseMatrix sum(dim);
        for (std::size_t a = 0; a < nc; ++a)
          for (std::size_t j = 0; j < dim; ++j) axpy(sum[j], Rational(1), Q[a][j]);
        for (std::size_t j = 0; j < dim; ++j)
          rec.test(sum[j] == SparseVec<std::size_t>{{j, Rational(1)}}, [&] { return "sum of projectors is not 1"; });
        for (std::size_t a = 0; a < nc; ++a) {
          auto Q2 = mul(Q[a], Q[a]);
          rec.test(Q2 == Q[a], [&] { return "Q_" + std::to_string(a) + " not idempotent"; });
          for (std::size_t b = a + 1; b < nc; ++b) {
            auto QQ = mul(Q[a], Q[b]);
            bool zero = true;
            for (const auto& col : QQ) zero = zero && col.empty();
            rec.test(zero, [&] { return "Q_" + std::to_string(a) + " Q_" + std::to_string(b) + " != 0"; });
          }
        }
        // The literal operator product agrees with the split on sampled vectors.
        if (dim <= 200)
          for (const auto& v : sampleVectors(dim, 2, rng())) {
            Polynomial p = d.joint.combine(v);
            auto parts = d.split(p);
            for (std::size_t a = 0; a < nc; ++a) {
              const auto& c = d.components[a];
              Polynomial got = projector(f, k, c.l, c.q)(p);
              rec.test((got - parts[a]).isZero(),
                       [&] { return "operator Q_{" + std::to_string(c.l) + "," + std::to_string(c.q) + "} on " + p.str(); });
            }
          }
      }
      s.checks.push_back(rec.done());
    }
  }
  return s;
}

SuiteResult verifyTripleRoute(const VerifyOptions& o) {
  SuiteResult s{"integration", {}};
  for (auto [m, n] : o.grid) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    const bool fischerOk = !nonpositiveEven(f.superdim());
    Recorder rec("triple-route", fischerOk ? "Pizzetti = Berezin form = Fischer route on monomials of degree <= 6"
                                           : "Pizzetti = Berezin form on monomials of degree <= 6 (Fischer route n/a)",
                 m, n);
    for (const auto& mono : monomialsUpTo(f, kmaxOr(o, 6))) {
      Polynomial p = monoPoly(f, mono);
      ScaledScalar a = pizzetti(p, f), b = berezinSphereOracle(p, f);
      rec.test(a == b, [&] { return p.str() + ": pizzetti " + a.str() + ", berezin " + b.str(); });
      if (fischerOk) {
        ScaledScalar c = fischerRouteIntegral(p, f);
        rec.test(a == c, [&] { return p.str() + ": pizzetti " + a.str() + ", fischer " + c.str(); });
      }
    }
    rec.note("T(1) = " + pizzetti(Polynomial::constant(f.spec, 1), f).str());
    s.checks.push_back(rec.done());
  }
  return s;
}

RatMatrix sampleGroupElement(int m, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  auto rnd = [&] { return Rational::fraction(num(rng), den(rng)); };
  const auto N = static_cast<std::size_t>(m + 2 * n);
  RatMatrix S(N, N);
  if (m > 0) {
    // Cayley: (I - K)(I + K)^-1 with K antisymmetric is orthogonal.
    const auto mm = static_cast<std::size_t>(m);
    RatMatrix K(mm, mm);
    for (std::size_t i = 0; i < mm; ++i)
      for (std::size_t j = i + 1; j < mm; ++j) {
        K.at(i, j) = rnd();
        K.at(j, i) = -K.at(i, j);
      }
    RatMatrix I = RatMatrix::identity(mm);
    RatMatrix A = (I - K) * *inverse(I + K);
    for (std::size_t i = 0; i < mm; ++i)
      for (std::size_t j = 0; j < mm; ++j) S.at(i, j) = A.at(i, j);
  }
  if (n > 0) {
    // (I + X)(I - X)^-1 with X = J^-1 Sym preserves J; retry if I - X is singular.
    const auto f = static_cast<std::size_t>(2 * n);
    Metric g = Metric::of(0, n);
    RatMatrix Jinv = g.g_inv;
    RatMatrix I = RatMatrix::identity(f);
    for (;;) {
      RatMatrix Sym(f, f);
      for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = i; j < f; ++j) Sym.at(i, j) = Sym.at(j, i) = rnd();
      RatMatrix X = Jinv * Sym;
      auto inv = inverse(I - X);
      if (!inv) continue;
      RatMatrix B = (I + X) * *inv;
      for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = 0; j < f; ++j) S.at(static_cast<std::size_t>(m) + i, static_cast<std::size_t>(m) + j) = B.at(i, j);
      break;
    }
  }
  return S;
}

SuiteResult verifyPizzettiProperties(const VerifyOptions& o) {
  SuiteResult s{"integration", {}};
  std::mt19937_64 rng(o.seed);
  for (auto [m, n] : o.grid) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    Polynomial r2 = rSquaredPoly(f);
    auto monos = monomialsUpTo(f, 4);

    Recorder rr("pizzetti-properties", "T(R^2 f) = T(f) on monomials of degree <= 4", m, n);
    for (const auto& mono : monos) {
      Polynomial p = monoPoly(f, mono);
      rr.test(pizzetti(r2 * p, f) == pizzetti(p, f), [&] { return p.str(); });
    }
    s.checks.push_back(rr.done());

    Recorder rl("pizzetti-properties", "T(L_ij f) = 0 on monomials of degree <= 4", m, n);
    auto gens = ospGenerators(f);
    for (const auto& g : gens)
      for (const auto& mono : monos) {
        Polynomial p = monoPoly(f, mono);
        rl.test(pizzetti(g.op(p), f).coeff.isZero(), [&] { return g.op.name() + " applied to " + p.str(); });
      }
    s.checks.push_back(rl.done());

    Recorder rh("pizzetti-properties", "T(H_k H_l) = 0 for k != l <= 4 (sampled pairs)", m, n);
    for (int k = 0; k <= 4; ++k)
      for (int l = k + 1; l <= 4; ++l) {
        GradedSpace Hk = harmonics(f, k), Hl = harmonics(f, l);
        if (Hk.dim() == 0 || Hl.dim() == 0) continue;
        for (int t = 0; t < 6; ++t) {
          const Polynomial& a = Hk.at(rng() % Hk.dim());
          const Polynomial& b = Hl.at(rng() % Hl.dim());
          rh.test(pizzetti(a * b, f).coeff.isZero(), [&] { return "(" + a.str() + ") * (" + b.str() + ")"; });
        }
      }
    s.checks.push_back(rh.done());

    Recorder rg("pizzetti-properties", "T(f o S) = T(f) for 5 sampled S in O(m) x Sp(2n)", m, n);
    Metric g = Metric::of(f);
    for (int t = 0; t < 5; ++t) {
      RatMatrix S = sampleGroupElement(m, n, rng());
      rg.test(S.transpose() * g.g * S == g.g, [&] { return "sampled S violates S^T g S = g:\n" + S.str(); });
      rg.test((r2.substituteLinear(S, f.block) - r2).isZero(), [&] { return "R^2 not invariant under\n" + S.str(); });
      for (const auto& mono : monos) {
        Polynomial p = monoPoly(f, mono);
        rg.test(pizzetti(p.substituteLinear(S, f.block), f) == pizzetti(p, f),
                [&] { return p.str() + " under\n" + S.str(); });
      }
    }
    s.checks.push_back(rg.done());
  }
  return s;
}

SuiteResult verifyDarboux(const VerifyOptions& o) {
  SuiteResult s{"darboux", {}};
  for (auto [m, n] : o.grid) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    Recorder rec("darboux", "Darboux residual of the spherical mean vanishes on monomials of degree <= 5", m, n);
    Recorder ser("darboux", "spherical mean equals its series form on monomials of degree <= 5", m, n);
    for (const auto& mono : monomialsUpTo(f, kmaxOr(o, 5))) {
      Polynomial p = monoPoly(f, mono);
      Polynomial res = darbouxResidual(p, f);
      rec.test(res.isZero(), [&] { return p.str() + ": residual " + res.str(); });
      MeanResult a = sphereMean(p, f), b = meanSeries(p, f);
      ser.test(a.pi_exponent == b.pi_exponent && (a.poly - b.poly).isZero(), [&] { return p.str(); });
    }
    s.checks.push_back(rec.done());
    s.checks.push_back(ser.done());
  }
  return s;
}

SuiteResult verifyIrreducibility(const VerifyOptions& o) {
  SuiteResult s{"irreducibility", {}};
  for (auto [m, n] : o.grid) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    for (int k = 0; k <= kmaxOr(o, 6); ++k) {
      IrreducibilityReport r = checkIrreducible(f, k, o.seed);
      Recorder rec("irreducibility", "closure verdict matches the predicate", m, n, k);
      rec.test(r.matches(), [&] {
        std::string w = "predicate " + std::string(r.predicate ? "irreducible" : "reducible") + ", closures say " +
                        (r.irreducible ? "irreducible" : "reducible");
        if (!r.saturation_agrees) w += "; saturation and component graph disagree";
        if (r.window && !r.window_is_closure) w += "; smallest closure is not R^{2k+M-2} H_{2-M-k}";
        if (!r.witness.empty()) w += "; seed " + r.witness;
        return w;
      });
      std::string note = "dim " + std::to_string(r.dim) + ", " + (r.irreducible ? "irreducible" : "reducible") +
                         ", seeds " + std::to_string(r.seeds);
      if (r.window) note += ", smallest closure " + std::to_string(r.min_closure) + " = dim H_{2-M-k}";
      if (r.saturation_checked) note += ", saturation cross-check";
      rec.note(note);
      s.checks.push_back(rec.done());
    }
  }
  return s;
}

SuiteResult verifyWindow(const VerifyOptions& o) {
  SuiteResult s{"irreducibility", {}};
  for (auto [m, n] : o.grid) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    const int M = f.superdim();
    for (int k = 0; k <= kmaxOr(o, 6); ++k) {
      if (!inWindow(m, n, k)) continue;
      Recorder w("window", "R^{2k+M-2} H_{2-M-k} is a harmonic invariant submodule equal to R^2 P_{k-2} cap H_k", m, n, k);
      WindowReport wr = windowSubmodule(f, k);
      std::size_t lowDim = harmonics(f, 2 - M - k).dim();
      w.test(wr.harmonic, [] { return std::string("not harmonic"); });
      w.test(wr.invariant, [] { return std::string("not invariant"); });
      w.test(wr.dim == lowDim && wr.dim > 0 && wr.dim < harmonics(f, k).dim(),
             [&] { return "dimension " + std::to_string(wr.dim) + ", expected proper of dim " + std::to_string(lowDim); });
      w.test(wr.equals_intersection,
             [&] { return "intersection has dimension " + std::to_string(wr.intersection_dim); });
      w.note("dim " + std::to_string(wr.dim));
      s.checks.push_back(w.done());

      Recorder mx("window", "window submodule is maximal and every nonzero closure contains it", m, n, k);
      MaximalityReport r = maximalityAndIndecomposability(f, k, o.seed);
      mx.test(r.maximal, [&] { return r.witness; });
      mx.test(r.indecomposable, [&] { return r.witness; });
      mx.note(std::to_string(r.outside_checked) + " basis vectors outside, " + std::to_string(r.samples_checked) +
              " seeds");
      s.checks.push_back(mx.done());
    }
  }
  return s;
}

SuiteResult verifyLkDimensions(const VerifyOptions& o) {
  SuiteResult s{"branching", {}};
  std::vector<std::tuple<int, int, int>> cases{{2, 1, 2}, {2, 2, 3}, {2, 2, 4}, {4, 2, 2}};
  for (auto [m, n] : o.grid)
    for (int k = 0; k <= kmaxOr(o, 6); ++k)
      if (inWindow(m, n, k) && std::find(cases.begin(), cases.end(), std::make_tuple(m, n, k)) == cases.end())
        cases.emplace_back(m, n, k);
  for (auto [m, n, k] : cases) {
    Frame f = Frame::superspace(m, n);
    const int M = f.superdim();
    Recorder rec("dimLk", "four-sum formula = dim H_k - dim H_{2-M-k} = dim H_k / (H_k cap R^2 P_{k-2})", m, n, k);
    BigInt formula = dimLk(m, n, k);
    long diff = static_cast<long>(harmonics(f, k).dim()) - static_cast<long>(harmonics(f, 2 - M - k).dim());
    std::size_t quot = dimLkQuotient(f, k);
    rec.test(formula == BigInt(diff),
             [&] { return "formula " + formula.get_str() + ", nullspace difference " + std::to_string(diff); });
    rec.test(formula == BigInt(quot), [&] { return "formula " + formula.get_str() + ", quotient " + std::to_string(quot); });
    rec.note("dim L = " + formula.get_str());
    s.checks.push_back(rec.done());
  }
  return s;
}

SuiteResult verifyBranching(const VerifyOptions& o) {
  SuiteResult s{"branching", {}};
  for (auto [m, n] : o.grid) {
    if (m < 2) continue;
    Recorder rec("branching", "sum_l dim L(m-1|2n, l) = dim L(m|2n, k) where completely reducible", m, n);
    std::size_t flagged = 0, truncated = 0;
    for (int k = 0; k <= kmaxOr(o, 6); ++k) {
      BranchReport b = branchLevels(m, n, k);
      if (b.kind == BranchKind::NotCompletelyReducible) {
        ++flagged;
        continue;
      }
      if (b.kind == BranchKind::Truncated) ++truncated;
      rec.test(b.holds, [&] {
        return "k=" + std::to_string(k) + ": sum over l in [" + std::to_string(b.lmin) + "," + std::to_string(b.lmax) +
               "] is " + b.sum.get_str() + ", expected " + b.target.get_str();
      });
    }
    rec.note(std::to_string(truncated) + " truncated, " + std::to_string(flagged) + " not completely reducible");
    s.checks.push_back(rec.done());
  }
  for (auto [m, n] : o.grid) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    for (int k = 0; k <= std::min(kmaxOr(o, 6), 4); ++k) {
      QuotientModule q = quotientModule(f, k);
      if (q.module.dim > 40) continue;
      Recorder rec("quotient", "P_k / R^2 P_{k-2}: well defined, dimension, and structure", m, n, k);
      BigInt want = dimPk(m, n, k) - dimPk(m, n, k - 2);
      rec.test(q.well_defined, [] { return std::string("generators do not preserve R^2 P_{k-2}"); });
      rec.test(BigInt(q.module.dim) == want, [&] { return "dimension " + std::to_string(q.module.dim); });
      rec.test(q.harmonic_image_invariant, [] { return std::string("image of H_k not invariant"); });
      const bool irr = irreduciblePredicate(m, n, k);
      if (irr) {
        std::size_t hk = harmonics(f, k).dim();
        rec.test(q.harmonic_image_dim == q.module.dim && hk == q.module.dim,
                 [&] { return "H_k does not map onto the quotient"; });
        for (std::size_t i = 0; i < q.module.dim; ++i) {
          auto c = invariantClosure({{{i, Rational(1)}}}, q.module);
          rec.test(c.is_whole, [&] { return "closure of basis vector " + std::to_string(i) + " is proper"; });
        }
      } else {
        rec.test(q.harmonic_image_dim < q.module.dim && q.harmonic_image_dim > 0,
                 [&] { return "image of H_k is not a proper submodule"; });
      }
      rec.note("dim " + std::to_string(q.module.dim) + ", image of H_k " + std::to_string(q.harmonic_image_dim));
      s.checks.push_back(rec.done());
    }
  }
  return s;
}

SuiteResult verifyBigAlgebra(const VerifyOptions& o) {
  SuiteResult s{"bigalgebra", {}};
  (void)o;
  for (auto [m, n] : std::vector<GridPoint>{{1, 1}, {2, 1}}) {
    Recorder rec("bigalgebra", "osp(4n+1|2m) oscillator realization closes on P_{<=3} with the expected rank", m, n);
    BigAlgebraReport r = bigAlgebraClosure(m, n, 3, OscillatorForm::KleinTwisted);
    rec.test(r.generators == r.expected && r.rank == r.expected, [&] {
      return "rank " + std::to_string(r.rank) + " of " + std::to_string(r.generators) + ", expected " +
             std::to_string(r.expected);
    });
    rec.test(r.brackets_closed == r.brackets, [&] { return r.witness; });
    rec.test(r.centralizer_ok == r.centralizer_checks, [&] { return r.witness; });
    BigAlgebraReport lit = bigAlgebraClosure(m, n, 3, OscillatorForm::Literal);
    rec.note("rank " + std::to_string(r.rank) + " = dim osp(4n+1|2m); Klein-twisted fermionic operators; literal operators close " +
             std::to_string(lit.brackets_closed) + "/" + std::to_string(lit.brackets) + " brackets" +
             (lit.witness.empty() ? "" : ", first failure " + lit.witness));
    s.checks.push_back(rec.done());
  }
  return s;
}

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{"sl2",      "invariance",  "casimir",     "dims",     "fischer",
                                              "decomp",   "projectors",  "integration", "darboux",  "irreducibility",
                                              "branching", "bigalgebra", "all"};
  return names;
}

SuiteResult runSuite(const std::string& name, const VerifyOptions& o) {
  if (name == "sl2") return verifySl2(o);
  if (name == "invariance") return verifyInvariance(o);
  if (name == "casimir") return verifyCasimir(o);
  if (name == "dims") return verifyDims(o);
  if (name == "fischer") return verifyFischer(o);
  if (name == "decomp") return verifyDecomp(o);
  if (name == "projectors") return verifyProjectors(o);
  if (name == "integration") {
    SuiteResult s = verifyTripleRoute(o);
    s.append(verifyPizzettiProperties(o));
    return s;
  }
  if (name == "darboux") return verifyDarboux(o);
  if (name == "irreducibility") {
    SuiteResult s = verifyIrreducibility(o);
    s.append(verifyWindow(o));
    return s;
  }
  if (name == "branching") {
    SuiteResult s = verifyLkDimensions(o);
    s.append(verifyBranching(o));
    return s;
  }
  if (name == "bigalgebra") return verifyBigAlgebra(o);
  if (name == "all") {
    SuiteResult s{"all", {}};
    for (const auto& n : suiteNames())
      if (n != "all") s.append(runSuite(n, o));
    return s;
  }
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace superharm
