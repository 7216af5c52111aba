#pragma once

// Small random generators for property tests. Everything is seeded so a
// failing case can be replayed from the printed seed.

#include <random>
#include <vector>

#include "exact.hpp"
#include "space.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin() { return between(0, 1) == 1; }

  superharm::Rational rational(int span = 9, int maxden = 6) {
    return superharm::Rational::fraction(between(-span, span), between(1, maxden));
  }

  superharm::Rational nonzeroRational(int span = 9, int maxden = 6) {
    int p = 0;
    while (p == 0) p = between(-span, span);
    return superharm::Rational::fraction(p, between(1, maxden));
  }

  superharm::RatMatrix matrix(std::size_t rows, std::size_t cols, double density = 0.6) {
    superharm::RatMatrix a(rows, cols);
    std::bernoulli_distribution keep(density);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (keep(eng_)) a.at(r, c) = rational(5, 3);
    return a;
  }

  // Random polynomial with up to `terms` monomials of degree <= maxdeg.
  superharm::Polynomial poly(const superharm::Frame& f, int maxdeg, int terms) {
    superharm::Polynomial p(f.spec);
    for (int t = 0; t < terms; ++t) {
      int d = between(0, maxdeg);
      auto monos = superharm::enumerateMonomials(f, d);
      if (monos.empty()) continue;
      p.addTerm(monos[static_cast<std::size_t>(between(0, static_cast<int>(monos.size()) - 1))], rational());
    }
    return p;
  }

  // Random homogeneous polynomial of degree d and fixed parity (0 even, 1 odd).
  superharm::Polynomial parityPoly(const superharm::Frame& f, int d, int parity, int terms) {
    superharm::Polynomial p(f.spec);
    auto monos = superharm::enumerateMonomials(f, d);
    std::vector<superharm::Monomial> keep;
    for (const auto& m : monos)
      if (m.parity() == parity) keep.push_back(m);
    if (keep.empty()) return p;
    for (int t = 0; t < terms; ++t)
      p.addTerm(keep[static_cast<std::size_t>(between(0, static_cast<int>(keep.size()) - 1))], rational());
    return p;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline const std::vector<std::pair<int, int>>& smallGrid() {
  static const std::vector<std::pair<int, int>> g{{1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {1, 2}};
  return g;
}

}  // namespace gen
