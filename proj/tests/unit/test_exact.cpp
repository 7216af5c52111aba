#include <doctest.h>

#include <functional>

#include "exact.hpp"
#include "generators.hpp"

using namespace superharm;

namespace {

// Cofactor expansion; only used on tiny matrices.
Rational det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return Rational(1);
  if (n == 1) return a[0][0];
  Rational sum(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].isZero()) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(row);
    }
    Rational t = a[0][c] * det(minor);
    sum += (c % 2 == 0) ? t : -t;
  }
  return sum;
}

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      fn(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Largest order of a nonvanishing minor.
std::size_t minorRank(const RatMatrix& a) {
  for (std::size_t k = std::min(a.rows(), a.cols()); k > 0; --k) {
    bool found = false;
    subsets(a.rows(), k, [&](const std::vector<std::size_t>& rs) {
      if (found) return;
      subsets(a.cols(), k, [&](const std::vector<std::size_t>& cs) {
        if (found) return;
        std::vector<std::vector<Rational>> sub;
        for (auto r : rs) {
          std::vector<Rational> row;
          for (auto c : cs) row.push_back(a.at(r, c));
          sub.push_back(row);
        }
        if (!det(sub).isZero()) found = true;
      });
    });
    if (found) return k;
  }
  return 0;
}

RatVector mul(const RatMatrix& a, const RatVector& v) {
  RatVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a.at(r, c) * v[c];
  return out;
}

// Gamma(t/2) for t >= 1 as (coefficient, power of sqrt(pi)), by direct recursion.
std::pair<Rational, int> halfGamma(int t) {
  if (t == 1) return {Rational(1), 1};
  if (t == 2) return {Rational(1), 0};
  auto [c, p] = halfGamma(t - 2);
  return {c * Rational::fraction(t - 2, 2), p};
}

}  // namespace

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rational::fraction(6, -4) == Rational::fraction(-3, 2));
  CHECK(Rational::fraction(6, -4).str() == "-3/2");
  CHECK(Rational::parse("10/4") == Rational::fraction(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK((Rational::fraction(1, 3) + Rational::fraction(1, 6)) == Rational::fraction(1, 2));
  CHECK(Rational::fraction(2, 3) * Rational::fraction(3, 2) == Rational(1));
  CHECK(Rational(0).isZero());
  CHECK(Rational(4).isInteger());
  CHECK(Rational::fraction(1, 2) < Rational::fraction(2, 3));
}

TEST_CASE("rational field axioms on random values") {
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Rational a = rng.rational(), b = rng.rational(), c = rng.nonzeroRational();
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a / c) * c == a);
    CHECK(a - a == Rational(0));
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  for (long n = 1; n < 30; ++n)
    for (long k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("gamma at integers and half integers") {
  GammaValue half = gamma(HalfInt::halves(1));
  CHECK(half.coeff == Rational(1));
  CHECK(half.sqrt_pi_power == 1);
  GammaValue g52 = gamma(HalfInt::halves(5));
  CHECK(g52.coeff == Rational::fraction(3, 4));
  CHECK(g52.sqrt_pi_power == 1);
  CHECK(gamma(HalfInt::integer(4)).coeff == Rational(6));
  CHECK(gamma(HalfInt::integer(0)).is_pole);
  CHECK(gamma(HalfInt::integer(-3)).is_pole);
  GammaValue neg = gamma(HalfInt::halves(-1));
  CHECK_FALSE(neg.is_pole);
  CHECK(neg.coeff == Rational(-2));
}

TEST_CASE("gamma agrees with a recursive oracle and the functional equation") {
  for (int t = 1; t <= 60; ++t) {
    auto [c, p] = halfGamma(t);
    GammaValue g = gamma(HalfInt::halves(t));
    CHECK(g.coeff == c);
    CHECK(g.sqrt_pi_power == p);
  }
  for (int t = -21; t <= 40; ++t) {
    HalfInt s = HalfInt::halves(t);
    if (s.isPole()) continue;
    GammaValue a = gamma(s), b = gamma(s + 1);
    CHECK(b.coeff == s.value() * a.coeff);
    CHECK(a.sqrt_pi_power == b.sqrt_pi_power);
  }
}

TEST_CASE("gamma ratios and generalized binomials") {
  CHECK(gammaRatio(HalfInt::halves(7), HalfInt::halves(3)) == Rational::fraction(15, 4));
  CHECK(gammaRatio(HalfInt::integer(2), HalfInt::integer(5)) == Rational::fraction(1, 24));
  CHECK_THROWS_AS(gammaRatio(HalfInt::halves(3), HalfInt::integer(1)), DomainError);
  CHECK(genBinomial(Rational(5), 2) == Rational(10));
  CHECK(genBinomial(Rational::fraction(1, 2), 2) == Rational::fraction(-1, 8));
  CHECK(genBinomial(Rational(-1), 3) == Rational(-1));
}

TEST_CASE("rank matches the largest nonvanishing minor") {
  gen::Rng rng(2024);
  for (int t = 0; t < 120; ++t) {
    std::size_t r = static_cast<std::size_t>(rng.between(1, 4)), c = static_cast<std::size_t>(rng.between(1, 5));
    RatMatrix a = rng.matrix(r, c, t % 3 == 0 ? 0.3 : 0.7);
    CHECK(rank(a) == minorRank(a));
  }
}

TEST_CASE("rank plus nullity equals the column count") {
  gen::Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = static_cast<std::size_t>(rng.between(1, 7)), c = static_cast<std::size_t>(rng.between(1, 7));
    RatMatrix a = rng.matrix(r, c, 0.5);
    auto ns = nullspace(a);
    CHECK(rank(a) + ns.size() == c);
    for (const auto& v : ns) {
      RatVector av = mul(a, v);
      for (const auto& x : av) CHECK(x.isZero());
    }
  }
}

TEST_CASE("rref is idempotent and keeps the row space") {
  gen::Rng rng(99);
  for (int t = 0; t < 80; ++t) {
    RatMatrix a = rng.matrix(static_cast<std::size_t>(rng.between(1, 6)), static_cast<std::size_t>(rng.between(1, 6)));
    RrefResult once = rref(a);
    RrefResult twice = rref(once.reduced);
    CHECK(once.reduced == twice.reduced);
    CHECK(once.pivots == twice.pivots);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      std::vector<RatVector> basis;
      for (std::size_t i = 0; i < once.pivots.size(); ++i) basis.push_back(once.reduced.row(i));
      CHECK(contains(a.row(r), basis));
    }
  }
}

TEST_CASE("inverse of a random invertible matrix") {
  gen::Rng rng(5);
  int tested = 0;
  for (int t = 0; t < 60; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.between(1, 5));
    RatMatrix a = rng.matrix(n, n, 0.8);
    auto inv = inverse(a);
    CHECK(inv.has_value() == (rank(a) == n));
    if (inv) {
      CHECK(a * *inv == RatMatrix::identity(n));
      CHECK(*inv * a == RatMatrix::identity(n));
      ++tested;
    }
  }
  CHECK(tested > 10);
}

TEST_CASE("subspace sum and intersection dimensions") {
  gen::Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    std::size_t d = 6;
    std::vector<RatVector> a, b;
    for (int i = 0; i < rng.between(1, 4); ++i) a.push_back(rng.matrix(1, d).row(0));
    for (int i = 0; i < rng.between(1, 4); ++i) b.push_back(rng.matrix(1, d).row(0));
    std::size_t ra = rank(RatMatrix::fromRows(a)), rb = rank(RatMatrix::fromRows(b));
    auto sum = subspaceSum(a, b);
    auto meet = subspaceIntersect(a, b);
    CHECK(sum.size() + meet.size() == ra + rb);
    for (const auto& v : meet) {
      CHECK(contains(v, a));
      CHECK(contains(v, b));
    }
  }
}

TEST_CASE("sparse echelon agrees with dense rank") {
  gen::Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    RatMatrix a = rng.matrix(static_cast<std::size_t>(rng.between(1, 6)), 6, 0.4);
    SparseEchelon<std::size_t> ech;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      SparseVec<std::size_t> v;
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!a.at(r, c).isZero()) v.emplace(c, a.at(r, c));
      ech.insert(v);
    }
    CHECK(ech.rank() == rank(a));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      SparseVec<std::size_t> v;
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!a.at(r, c).isZero()) v.emplace(c, a.at(r, c));
      CHECK(ech.contains(v));
      CHECK(ech.reduce(v).empty());
    }
  }
}
