#include <doctest.h>

#include "generators.hpp"
#include "harmonic.hpp"
#include "operators.hpp"

using namespace superharm;

namespace {

Polynomial P(const Frame& f, const char* text) { return Polynomial::parse(f.spec, text); }

bool agreeOn(const LinearOp& a, const LinearOp& b, const Frame& f, int kmax) {
  for (int k = 0; k <= kmax; ++k)
    if (firstDifference(a, b, monomialBasisPk(f, k))) return false;
  return true;
}

}  // namespace

TEST_CASE("metric blocks") {
  Metric g = Metric::of(1, 1);
  CHECK(g.g.at(0, 0) == Rational(1));
  CHECK(g.g.at(1, 2) == Rational::fraction(-1, 2));
  CHECK(g.g.at(2, 1) == Rational::fraction(1, 2));
  CHECK(g.g * g.g_inv == RatMatrix::identity(3));
  CHECK(g.g_inv.at(1, 2) == Rational(2));
}

TEST_CASE("R^2 and the laplacian in small dimensions") {
  Frame f11 = Frame::superspace(1, 1);
  CHECK(rSquaredPoly(f11) == P(f11, "x1^2 - e1*e2"));
  Frame f22 = Frame::superspace(2, 2);
  CHECK(rSquaredPoly(f22) == P(f22, "x1^2 + x2^2 - e1*e2 - e3*e4"));
  CHECK(thetaSquaredPoly(f22) == P(f22, "-e1*e2 - e3*e4"));
  CHECK(laplacian(f11)(P(f11, "e1*e2")) == P(f11, "4"));
  CHECK(laplacian(f11)(P(f11, "x1^3")) == P(f11, "6*x1"));
}

TEST_CASE("laplacian of R^2 is twice the superdimension") {
  for (auto [m, n] : gen::smallGrid()) {
    Frame f = Frame::superspace(m, n);
    CHECK(laplacian(f)(rSquaredPoly(f)) == P(f, std::to_string(2 * (m - 2 * n)).c_str()));
  }
}

TEST_CASE("euler operator measures degree") {
  gen::Rng rng(1);
  for (auto [m, n] : gen::smallGrid()) {
    Frame f = Frame::superspace(m, n);
    for (int k = 0; k <= 4; ++k) {
      Polynomial p(f.spec);
      for (const auto& mono : enumerateMonomials(f, k)) p.addTerm(mono, rng.rational());
      CHECK(euler(f)(p) == Rational(k) * p);
    }
  }
}

TEST_CASE("sl2 brackets on P_k") {
  for (auto [m, n] : gen::smallGrid()) {
    Frame f = Frame::superspace(m, n);
    const int M = m - 2 * n;
    LinearOp lap = laplacian(f), r2 = rSquared(f), e = euler(f), id = LinearOp::identity(f.spec);
    LinearOp hh = e + Rational::fraction(M, 2) * id;
    CHECK(agreeOn(supercommutator(Rational::fraction(1, 2) * lap, Rational::fraction(1, 2) * r2), hh, f, 4));
    CHECK(agreeOn(supercommutator(hh, r2), 2 * r2, f, 4));
    CHECK(agreeOn(supercommutator(hh, lap), Rational(-2) * lap, f, 4));
  }
}

TEST_CASE("inner product of two supervectors on R^{0|2}") {
  SpecPtr spec = VarSpec::doubled(0, 1);
  Frame x{spec, 0}, y{spec, 1};
  Polynomial x1 = Polynomial::variable(spec, x.var(1)), x2 = Polynomial::variable(spec, x.var(2));
  Polynomial y1 = Polynomial::variable(spec, y.var(1)), y2 = Polynomial::variable(spec, y.var(2));
  CHECK(innerProduct(x, y) == Rational::fraction(-1, 2) * (x1 * y2 - x2 * y1));
  CHECK(innerProduct(x, x) == rSquaredPoly(x));
}

TEST_CASE("osp generators commute with R^2 and the laplacian") {
  for (auto [m, n] : gen::smallGrid()) {
    Frame f = Frame::superspace(m, n);
    LinearOp lap = laplacian(f), r2 = rSquared(f), e = euler(f);
    for (const auto& g : ospGenerators(f)) {
      CHECK(agreeOn(supercommutator(g.op, lap), 0 * lap, f, 4));
      CHECK(agreeOn(supercommutator(g.op, r2), 0 * r2, f, 3));
      CHECK(agreeOn(supercommutator(g.op, e), 0 * e, f, 3));
    }
  }
}

TEST_CASE("osp generators are super-antisymmetric") {
  for (auto [m, n] : gen::smallGrid()) {
    Frame f = Frame::superspace(m, n);
    Metric g = Metric::of(f);
    for (int i = 1; i <= f.size(); ++i)
      for (int j = 1; j <= f.size(); ++j) {
        int s = (f.isFermionic(i) && f.isFermionic(j)) ? 1 : -1;
        CHECK(agreeOn(ospGenerator(f, g, i, j), Rational(s) * ospGenerator(f, g, j, i), f, 3));
      }
  }
}

TEST_CASE("super Jacobi identity for sampled generator triples") {
  gen::Rng rng(77);
  for (auto [m, n] : gen::smallGrid()) {
    Frame f = Frame::superspace(m, n);
    auto gens = ospGenerators(f);
    if (gens.empty()) continue;
    for (int t = 0; t < 12; ++t) {
      const auto& a = gens[static_cast<std::size_t>(rng.between(0, static_cast<int>(gens.size()) - 1))].op;
      const auto& b = gens[static_cast<std::size_t>(rng.between(0, static_cast<int>(gens.size()) - 1))].op;
      const auto& c = gens[static_cast<std::size_t>(rng.between(0, static_cast<int>(gens.size()) - 1))].op;
      LinearOp lhs = supercommutator(a, supercommutator(b, c));
      LinearOp rhs = supercommutator(supercommutator(a, b), c) +
                     Rational((a.parity() * b.parity()) ? -1 : 1) * supercommutator(b, supercommutator(a, c));
      CHECK(agreeOn(lhs, rhs, f, 2));
    }
  }
}

TEST_CASE("casimir form equals the Laplace-Beltrami operator") {
  for (auto [m, n] : gen::smallGrid()) {
    Frame f = Frame::superspace(m, n);
    CHECK(agreeOn(casimirForm(f), laplaceBeltrami(f), f, 4));
  }
}

TEST_CASE("the inverse-metric reading of the casimir fails on R^{1|2}") {
  Frame f = Frame::superspace(1, 1);
  CHECK_FALSE(agreeOn(casimirForm(f, RaisedIndex::InverseEntries), laplaceBeltrami(f), f, 1));
}

TEST_CASE("laplace-beltrami splits into bosonic and fermionic parts on harmonics") {
  Frame f = Frame::superspace(2, 1);
  for (int k = 0; k <= 4; ++k) {
    GradedSpace h = harmonics(f, k);
    LinearOp lb = laplaceBeltrami(f);
    const int M = f.superdim();
    for (const auto& v : h.basis()) CHECK(lb(v) == Rational(-k * (k + M - 2)) * v);
  }
}

TEST_CASE("matrix of the laplacian has the expected rank") {
  Frame f = Frame::superspace(3, 0);
  for (int k = 2; k <= 6; ++k) {
    RatMatrix a = matrixOf(laplacian(f), monomialBasisPk(f, k), monomialBasisPk(f, k - 2));
    CHECK(rank(a) == static_cast<std::size_t>(dimPk(3, 0, k - 2).get_ui()));
  }
}
