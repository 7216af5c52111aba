#include <doctest.h>

#include "generators.hpp"
#include "superalgebra.hpp"

using namespace superharm;

namespace {

Polynomial P(const Frame& f, const char* text) { return Polynomial::parse(f.spec, text); }

int sign(int parity) { return parity ? -1 : 1; }

}  // namespace

TEST_CASE("parsing and printing") {
  Frame f = Frame::superspace(2, 1);
  Polynomial p = P(f, "x1^2 - 2*e1*e2 + 3/4*x2*e1");
  CHECK(p.size() == 3);
  CHECK(Polynomial::parse(f.spec, p.str()) == p);
  CHECK(P(f, "0").isZero());
  CHECK(P(f, "e1^2 + x1").str() == "x1");
  CHECK(P(f, "e2*x1*e1") == P(f, "-x1*e1*e2"));
  CHECK(P(f, "x1*x1*x2") == P(f, "x1^2*x2"));
}

TEST_CASE("parse errors report a position") {
  Frame f = Frame::superspace(2, 1);
  try {
    P(f, "x1 + y3");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(P(f, "x1^^2"), ParseError);
  CHECK_THROWS_AS(P(f, "(x1 + e1)"), ParseError);
  CHECK_THROWS_AS(P(f, "x1 x2"), ParseError);
  CHECK_THROWS_AS(P(f, "e3"), ParseError);
  CHECK_THROWS_AS(P(f, "x1 / 0"), ParseError);
}

TEST_CASE("print then parse is the identity on random polynomials") {
  gen::Rng rng(3);
  for (auto [m, n] : gen::smallGrid()) {
    Frame f = Frame::superspace(m, n);
    for (int t = 0; t < 25; ++t) {
      Polynomial p = rng.poly(f, 4, 6);
      CHECK(Polynomial::parse(f.spec, p.str()) == p);
    }
  }
}

TEST_CASE("grassmann relations") {
  Frame f = Frame::superspace(1, 2);
  CHECK((P(f, "e1") * P(f, "e1")).isZero());
  CHECK(P(f, "e1*e2") == -Rational(1) * P(f, "e2*e1"));
  CHECK(P(f, "e1*e2*e3*e4") == P(f, "e3*e4*e1*e2"));
  CHECK(P(f, "e1*e3*e2") == -Rational(1) * P(f, "e1*e2*e3"));
  CHECK(P(f, "x1*e1") == P(f, "e1*x1"));
  CHECK(P(f, "e1*e2").parity() == 0);
  CHECK(P(f, "x1*e2").parity() == 1);
  CHECK(P(f, "x1 + e2").parity() == -1);
}

TEST_CASE("multiplication is associative and supercommutative") {
  gen::Rng rng(41);
  for (auto [m, n] : gen::smallGrid()) {
    Frame f = Frame::superspace(m, n);
    for (int t = 0; t < 20; ++t) {
      int pa = rng.between(0, 1), pb = rng.between(0, 1);
      Polynomial a = rng.parityPoly(f, rng.between(0, 3), pa, 3);
      Polynomial b = rng.parityPoly(f, rng.between(0, 3), pb, 3);
      Polynomial c = rng.poly(f, 2, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == Rational(sign(pa * pb)) * (b * a));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("left derivatives satisfy the graded Leibniz rule") {
  gen::Rng rng(8);
  for (auto [m, n] : gen::smallGrid()) {
    Frame f = Frame::superspace(m, n);
    for (int i = 1; i <= f.size(); ++i) {
      VarRef v = f.var(i);
      int pv = v.fermionic ? 1 : 0;
      for (int t = 0; t < 8; ++t) {
        int pa = rng.between(0, 1);
        Polynomial a = rng.parityPoly(f, rng.between(0, 3), pa, 3);
        Polynomial b = rng.poly(f, 3, 4);
        Polynomial lhs = (a * b).leftDeriv(v);
        Polynomial rhs = a.leftDeriv(v) * b + Rational(sign(pv * pa)) * (a * b.leftDeriv(v));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("derivatives of generators") {
  Frame f = Frame::superspace(2, 1);
  CHECK(P(f, "x1^3*x2").leftDeriv(f.var(1)) == P(f, "3*x1^2*x2"));
  CHECK(P(f, "e1*e2").leftDeriv(f.var(3)) == P(f, "e2"));
  CHECK(P(f, "e1*e2").leftDeriv(f.var(4)) == P(f, "-e1"));
  CHECK(P(f, "x1").leftDeriv(f.var(3)).isZero());
}

TEST_CASE("fermionic derivatives anticommute") {
  gen::Rng rng(12);
  Frame f = Frame::superspace(1, 2);
  for (int t = 0; t < 30; ++t) {
    Polynomial p = rng.poly(f, 4, 6);
    for (int i = 2; i <= 5; ++i)
      for (int j = 2; j <= 5; ++j)
        CHECK(p.leftDeriv(f.var(j)).leftDeriv(f.var(i)) == -Rational(1) * p.leftDeriv(f.var(i)).leftDeriv(f.var(j)));
  }
}

TEST_CASE("berezin integral picks the top fermionic coefficient") {
  Frame f = Frame::superspace(1, 1);
  CHECK(P(f, "e1*e2").berezin(0) == P(f, "1"));
  CHECK(P(f, "x1^2*e2*e1").berezin(0) == P(f, "-x1^2"));
  CHECK(P(f, "e1 + x1*e2 + 7").berezin(0).isZero());
}

TEST_CASE("linear substitution by the identity and by a permutation") {
  Frame f = Frame::superspace(2, 1);
  gen::Rng rng(4);
  RatMatrix swap(4, 4);
  swap.at(0, 1) = swap.at(1, 0) = swap.at(2, 2) = swap.at(3, 3) = Rational(1);
  for (int t = 0; t < 20; ++t) {
    Polynomial p = rng.poly(f, 3, 5);
    CHECK(p.substituteLinear(RatMatrix::identity(4), 0) == p);
    CHECK(p.substituteLinear(swap, 0).substituteLinear(swap, 0) == p);
  }
  CHECK(P(f, "x1^2*x2").substituteLinear(swap, 0) == P(f, "x2^2*x1"));
  RatMatrix mixed = RatMatrix::identity(4);
  mixed.at(0, 2) = Rational(1);
  CHECK_THROWS_AS(P(f, "x1").substituteLinear(mixed, 0), DomainError);
}

TEST_CASE("powers") {
  Frame f = Frame::superspace(1, 1);
  Polynomial r2 = P(f, "x1^2 - e1*e2");
  CHECK(r2.pow(0) == P(f, "1"));
  CHECK(r2.pow(2) == P(f, "x1^4 - 2*x1^2*e1*e2"));
  CHECK(r2.pow(3) == r2 * r2 * r2);
  CHECK(r2.pow(2).homogeneousDegree() == 4);
}
