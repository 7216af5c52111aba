#include <doctest.h>

#include "generators.hpp"
#include "harmonic.hpp"
#include "operators.hpp"

using namespace superharm;

namespace {

Polynomial P(const Frame& f, const char* text) { return Polynomial::parse(f.spec, text); }

// sum_j C(2n, j) C(m + k - j - 1, k - j): choose the fermions, then the bosons.
long monomialCount(int m, int n, int k) {
  long total = 0;
  for (int j = 0; j <= std::min(2 * n, k); ++j) {
    long ferm = binomial(2 * n, j).get_si();
    long bos = m == 0 ? (k == j ? 1 : 0) : binomial(m + k - j - 1, k - j).get_si();
    total += ferm * bos;
  }
  return total;
}

long classicalHarmonicDim(int m, int k) {
  if (k < 2) return binomial(m + k - 1, k).get_si();
  return binomial(m + k - 1, k).get_si() - binomial(m + k - 3, k - 2).get_si();
}

std::size_t sz(const BigInt& b) { return static_cast<std::size_t>(b.get_ui()); }

}  // namespace

TEST_CASE("dim P_k agrees with a direct count") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 6; ++k) {
        if (m + n == 0) continue;
        CHECK(dimPk(m, n, k) == monomialCount(m, n, k));
        CHECK(monomialBasisPk(Frame::superspace(m, n), k).dim() == static_cast<std::size_t>(monomialCount(m, n, k)));
      }
}

TEST_CASE("classical harmonic dimensions") {
  for (int m = 1; m <= 5; ++m)
    for (int k = 0; k <= 6; ++k) {
      CHECK(dimHkFormula(m, 0, k) == classicalHarmonicDim(m, k));
      CHECK(harmonics(Frame::superspace(m, 0), k).dim() == static_cast<std::size_t>(classicalHarmonicDim(m, k)));
    }
  CHECK(dimHkFormula(3, 0, 2) == 5);
}

TEST_CASE("harmonic dimension formula against the nullspace") {
  CHECK(dimHkFormula(2, 1, 2) == 7);
  CHECK(harmonics(Frame::superspace(2, 1), 2).dim() == 7);
  for (auto [m, n] : gen::smallGrid()) {
    if (m == 0) continue;
    for (int k = 0; k <= 5; ++k) CHECK(harmonics(Frame::superspace(m, n), k).dim() == sz(dimHkFormula(m, n, k)));
  }
  CHECK_THROWS_AS(dimHkFormula(0, 1, 1), DomainError);
}

TEST_CASE("harmonic basis vectors are killed by the laplacian") {
  for (auto [m, n] : gen::smallGrid()) {
    Frame f = Frame::superspace(m, n);
    LinearOp lap = laplacian(f);
    for (int k = 0; k <= 4; ++k)
      for (const auto& v : harmonics(f, k).basis()) CHECK(lap(v).isZero());
  }
}

TEST_CASE("fermionic harmonics vanish above n") {
  for (int n = 0; n <= 3; ++n) {
    Frame f = Frame::superspace(1, n);
    for (int q = n + 1; q <= 2 * n + 2; ++q) CHECK(fermionicHarmonics(f, q).dim() == 0);
    for (int q = 0; q <= n; ++q) CHECK(fermionicHarmonics(f, q).dim() > 0);
  }
}

TEST_CASE("fischer decomposition") {
  Frame f = Frame::superspace(3, 1);
  auto pieces = fischer(f, 2);
  REQUIRE(pieces.size() == 2);
  std::size_t total = 0;
  for (const auto& pc : pieces) total += pc.space.dim();
  CHECK(total == 13);
  CHECK(pieces[0].space.dim() + pieces[1].space.dim() == 13);

  for (int m = 1; m <= 4; ++m)
    for (int k = 0; k <= 5; ++k) {
      std::size_t sum = 0;
      for (const auto& pc : fischer(Frame::superspace(m, 0), k)) sum += pc.space.dim();
      CHECK(sum == static_cast<std::size_t>(monomialCount(m, 0, k)));
    }
}

TEST_CASE("fischer on the purely fermionic plane") {
  Frame f = Frame::superspace(0, 1);
  std::size_t total = 0;
  for (int k = 0; k <= 2; ++k)
    for (const auto& pc : fischer(f, k)) total += pc.space.dim();
  CHECK(total == 4);
  auto deg2 = fischer(f, 2);
  REQUIRE(deg2.size() == 1);
  CHECK(deg2[0].j == 1);
  CHECK(deg2[0].space.dim() == 1);
}

TEST_CASE("fischer is refused when the superdimension is a nonpositive even integer") {
  CHECK_THROWS_AS(fischer(Frame::superspace(2, 1), 2), DomainError);
  CHECK_THROWS_AS(fischer(Frame::superspace(2, 2), 3), DomainError);
  CHECK_NOTHROW(fischer(Frame::superspace(3, 2), 3));
}

TEST_CASE("special polynomials f_{k,p,q}") {
  for (auto [m, n] : gen::smallGrid()) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= n; ++q) CHECK(fkpq(f, 0, p, q) == P(f, "1"));
    if (n >= 1)
      CHECK(fkpq(f, 1, 0, 0) == Rational(n) * rSquaredBosonicPoly(f) + Rational::fraction(m, 2) * thetaSquaredPoly(f));
  }
  CHECK_THROWS_AS(fkpq(Frame::superspace(2, 1), 2, 0, 0), DomainError);
}

TEST_CASE("f_{k,p,q} times a bosonic and fermionic harmonic is harmonic") {
  Frame f = Frame::superspace(3, 2);
  LinearOp lap = laplacian(f);
  for (int q = 0; q <= 2; ++q)
    for (int k = 0; k <= 2 - q; ++k)
      for (int p = 0; p <= 2; ++p) {
        Polynomial fk = fkpq(f, k, p, q);
        GradedSpace hb = bosonicHarmonics(f, p), hf = fermionicHarmonics(f, q);
        CHECK(lap(fk * hb.at(0) * hf.at(0)).isZero());
      }
}

TEST_CASE("components of H_2 on R^{2|2}") {
  auto comps = decomposeHk(Frame::superspace(2, 1), 2);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].space.dim() == 2);
  CHECK(comps[1].space.dim() == 1);
  CHECK(comps[2].space.dim() == 4);
  CHECK(comps[1].l == 1);
  CHECK(comps[2].q == 1);
}

TEST_CASE("components of H_1 on R^{3|2}") {
  auto comps = decomposeHk(Frame::superspace(3, 1), 1);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].space.dim() == 3);
  CHECK(comps[1].space.dim() == 2);
}

TEST_CASE("component dimensions add up and the split is exact") {
  gen::Rng rng(55);
  for (auto [m, n] : gen::smallGrid()) {
    if (m == 0) continue;
    Frame f = Frame::superspace(m, n);
    for (int k = 0; k <= 4; ++k) {
      HkDecomposition d = decomposition(f, k);
      std::size_t total = 0;
      for (const auto& c : d.components) total += c.space.dim();
      CHECK(total == harmonics(f, k).dim());
      CHECK(d.joint.dim() == total);
      if (total == 0) continue;
      RatVector coords(total);
      for (auto& c : coords) c = rng.rational();
      Polynomial v = d.joint.combine(coords);
      Polynomial back(f.spec);
      for (const auto& part : d.split(v)) back += part;
      CHECK(back == v);
    }
  }
}

TEST_CASE("projectors act as the identity on their component and kill the rest") {
  for (auto [m, n, k] : {std::tuple{2, 1, 2}, std::tuple{3, 1, 2}, std::tuple{3, 2, 3}, std::tuple{4, 1, 3}}) {
    Frame f = Frame::superspace(m, n);
    auto comps = decomposeHk(f, k);
    for (const auto& c : comps) {
      LinearOp q = projector(f, k, c.l, c.q);
      for (const auto& other : comps)
        for (const auto& v : other.space.basis()) {
          if (other.l == c.l && other.q == c.q)
            CHECK(q(v) == v);
          else
            CHECK(q(v).isZero());
        }
    }
  }
}

TEST_CASE("projector product formula collides for m = 1") {
  Frame f = Frame::superspace(1, 1);
  CHECK_THROWS_AS(projector(f, 1, 0, 0), EigenvalueCollision);
}
