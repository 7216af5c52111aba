#include <doctest.h>

#include "generators.hpp"
#include "harmonic.hpp"
#include "operators.hpp"
#include "sphereint.hpp"
#include "verify.hpp"

using namespace superharm;

namespace {

Polynomial P(const Frame& f, const char* text) { return Polynomial::parse(f.spec, text); }

ScaledScalar S(long num, long den, int pi) { return ScaledScalar{Rational::fraction(num, den), pi}; }

// Gamma(t/2), t >= 1, as (coefficient, power of sqrt(pi)).
std::pair<Rational, int> halfGamma(int t) {
  if (t == 1) return {Rational(1), 1};
  if (t == 2) return {Rational(1), 0};
  auto [c, p] = halfGamma(t - 2);
  return {c * Rational::fraction(t - 2, 2), p};
}

// Classical moment over the unit sphere S^{m-1}: 2 prod Gamma((a_i+1)/2) / Gamma((|a|+m)/2).
ScaledScalar momentOracle(const std::vector<int>& a) {
  int total = 0;
  for (int e : a) {
    if (e % 2) return ScaledScalar{Rational(0), static_cast<int>(a.size()) / 2};
    total += e;
  }
  Rational c(2);
  int sqrt_pi = 0;
  for (int e : a) {
    auto [g, p] = halfGamma(e + 1);
    c *= g;
    sqrt_pi += p;
  }
  auto [g, p] = halfGamma(total + static_cast<int>(a.size()));
  c /= g;
  sqrt_pi -= p;
  REQUIRE(sqrt_pi % 2 == 0);
  return ScaledScalar{c, sqrt_pi / 2};
}

Polynomial lVar(const SpecPtr& doubled) { return Polynomial::variable(doubled, *doubled->find("L")); }

}  // namespace

TEST_CASE("classical sphere areas") {
  CHECK(pizzetti(P(Frame::superspace(2, 0), "1"), Frame::superspace(2, 0)) == S(2, 1, 1));
  CHECK(pizzetti(P(Frame::superspace(3, 0), "1"), Frame::superspace(3, 0)) == S(4, 1, 1));
  CHECK(pizzetti(P(Frame::superspace(4, 0), "1"), Frame::superspace(4, 0)) == S(2, 1, 2));
  CHECK(pizzetti(P(Frame::superspace(1, 0), "1"), Frame::superspace(1, 0)) == S(2, 1, 0));
}

TEST_CASE("supersphere volumes") {
  Frame f31 = Frame::superspace(3, 1);
  CHECK(pizzetti(P(f31, "1"), f31) == S(2, 1, 0));
  Frame f21 = Frame::superspace(2, 1);
  CHECK(pizzetti(P(f21, "1"), f21).coeff.isZero());
}

TEST_CASE("bosonic moments match the gamma oracle") {
  CHECK(bosonicSphereMoment({2, 0, 0}) == S(4, 3, 1));
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> a(static_cast<std::size_t>(m));
    for (int t = 0; t < 200; ++t) {
      int idx = t;
      for (auto& e : a) {
        e = idx % 5;
        idx /= 5;
      }
      ScaledScalar want = momentOracle(a), got = bosonicSphereMoment(a);
      CHECK(got.coeff == want.coeff);
      if (!want.coeff.isZero()) CHECK(got.pi_exponent == want.pi_exponent);
    }
  }
}

TEST_CASE("pizzetti of monomials matches the classical moments") {
  Frame f = Frame::superspace(3, 0);
  for (const auto& mono : enumerateMonomials(f, 4)) {
    std::vector<int> a(mono.exps.begin(), mono.exps.begin() + 3);
    CHECK(pizzetti(Polynomial::monomial(f.spec, mono), f).coeff == momentOracle(a).coeff);
  }
}

TEST_CASE("R^2 integrates like 1") {
  for (auto [m, n] : gen::smallGrid()) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    Polynomial r2 = rSquaredPoly(f);
    ScaledScalar one = pizzetti(P(f, "1"), f);
    CHECK(pizzetti(r2, f) == one);
    CHECK(pizzetti(r2.pow(2), f) == one);
    if (m >= 1 && !((m - 2 * n) <= 0 && (m - 2 * n) % 2 == 0)) CHECK(fischerRouteIntegral(r2.pow(2), f) == one);
  }
}

TEST_CASE("three integration routes agree on random polynomials") {
  gen::Rng rng(123);
  for (auto [m, n] : gen::smallGrid()) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    const int M = m - 2 * n;
    for (int t = 0; t < 10; ++t) {
      Polynomial p = rng.poly(f, 5, 6);
      ScaledScalar a = pizzetti(p, f);
      CHECK(a == berezinSphereOracle(p, f));
      if (!(M <= 0 && M % 2 == 0)) CHECK(a == fischerRouteIntegral(p, f));
      CHECK(a.pi_exponent == sphereUnit(m, n));
    }
  }
}

TEST_CASE("pizzetti is invariant and kills R^2 f - f") {
  gen::Rng rng(9);
  for (auto [m, n] : gen::smallGrid()) {
    Frame f = Frame::superspace(m, n);
    if (m == 0) continue;
    auto gens = ospGenerators(f);
    for (int t = 0; t < 6; ++t) {
      Polynomial p = rng.poly(f, 4, 5);
      CHECK(pizzetti(rSquaredPoly(f) * p, f) == pizzetti(p, f));
      for (const auto& g : gens) CHECK(pizzetti(g.op(p), f).coeff.isZero());
    }
  }
}

TEST_CASE("harmonics of different degree are orthogonal") {
  for (auto [m, n] : {std::pair{3, 1}, std::pair{2, 1}, std::pair{1, 1}}) {
    Frame f = Frame::superspace(m, n);
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l) {
        if (k == l) continue;
        GradedSpace hk = harmonics(f, k), hl = harmonics(f, l);
        for (const auto& a : hk.basis())
          for (const auto& b : hl.basis()) {
            CHECK(pizzetti(a * b, f).coeff.isZero());
            CHECK(sphereBilinear(a, b, f).coeff.isZero());
          }
      }
  }
}

TEST_CASE("bilinear form basics") {
  Frame f = Frame::superspace(2, 1);
  CHECK(sphereBilinear(P(f, "1"), P(f, "1"), f) == pizzetti(P(f, "1"), f));
  Frame f3 = Frame::superspace(3, 0);
  CHECK(sphereBilinear(P(f3, "x1"), P(f3, "x1"), f3) == S(4, 3, 1));
}

TEST_CASE("group elements preserve the integral") {
  gen::Rng rng(64);
  for (auto [m, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{1, 2}}) {
    Frame f = Frame::superspace(m, n);
    for (std::uint64_t s = 1; s <= 3; ++s) {
      RatMatrix S = sampleGroupElement(m, n, s);
      Metric g = Metric::of(f);
      CHECK(S.transpose() * g.g * S == g.g);
      Polynomial p = rng.poly(f, 4, 5);
      CHECK(pizzetti(p.substituteLinear(S, 0), f) == pizzetti(p, f));
      CHECK(rSquaredPoly(f).substituteLinear(S, 0) == rSquaredPoly(f));
    }
  }
}

TEST_CASE("spherical mean of 1 and R^2") {
  for (auto [m, n] : gen::smallGrid()) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    ScaledScalar one = pizzetti(P(f, "1"), f);
    SpecPtr d = doubledSpec(m, n);
    MeanResult m1 = sphereMean(P(f, "1"), f);
    CHECK(m1.poly == one.coeff * Polynomial::constant(d, Rational(1)));
    MeanResult mr = sphereMean(rSquaredPoly(f), f);
    Polynomial want = one.coeff * (embedInDoubled(rSquaredPoly(f), d) + lVar(d) * lVar(d));
    CHECK(mr.poly == want);
    CHECK(mr.pi_exponent == one.pi_exponent);
  }
}

TEST_CASE("spherical mean equals its series form") {
  gen::Rng rng(21);
  for (auto [m, n] : gen::smallGrid()) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    for (int t = 0; t < 5; ++t) {
      Polynomial p = rng.poly(f, 4, 4);
      MeanResult a = sphereMean(p, f), b = meanSeries(p, f);
      CHECK(a.poly == b.poly);
      CHECK(a.pi_exponent == b.pi_exponent);
    }
  }
}

TEST_CASE("darboux residual vanishes") {
  gen::Rng rng(5150);
  for (auto [m, n] : gen::smallGrid()) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    CHECK(darbouxResidual(P(f, "1"), f).isZero());
    CHECK(darbouxResidual(rSquaredPoly(f), f).isZero());
    for (int t = 0; t < 6; ++t) CHECK(darbouxResidual(rng.poly(f, 5, 5), f).isZero());
  }
}

TEST_CASE("integration needs a bosonic direction") {
  Frame f = Frame::superspace(0, 1);
  CHECK_THROWS_AS(pizzetti(P(f, "1"), f), DomainError);
  CHECK_THROWS_AS(sphereMean(P(f, "1"), f), DomainError);
}

TEST_CASE("pi exponent is the floor of half the superdimension") {
  CHECK(sphereUnit(3, 0) == 1);
  CHECK(sphereUnit(3, 1) == 0);
  CHECK(sphereUnit(2, 2) == -1);
  CHECK(sphereUnit(1, 1) == -1);
  CHECK(sphereUnit(1, 2) == -2);
}
