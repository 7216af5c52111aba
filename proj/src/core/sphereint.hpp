#pragma once

// Supersphere integration of polynomials: Pizzetti series, Berezin form and
// the Fischer route, plus spherical means.

#include "harmonic.hpp"

namespace superharm {

/// coeff * pi^pi_exponent
struct ScaledScalar {
  Rational coeff;
  int pi_exponent = 0;

  ScaledScalar& operator+=(const ScaledScalar& o);
  friend ScaledScalar operator+(ScaledScalar a, const ScaledScalar& b) { return a += b; }
  friend ScaledScalar operator*(const Rational& c, ScaledScalar a) {
    a.coeff *= c;
    return a;
  }
  friend bool operator==(const ScaledScalar&, const ScaledScalar&) = default;
  std::string str() const;
};

/// pi power carried by every supersphere integral on R^{m|2n}.
int sphereUnit(int m, int n);

/// sum_k 2 / (4^k k! Gamma(k + M/2)) (lap^k f)(0) over the frame's variables;
/// other variables are carried as coefficients. The result is in units of pi^unit.
Polynomial pizzettiPartial(const Polynomial& f, const Frame& over, int& unit);
ScaledScalar pizzetti(const Polynomial& f, const Frame& frame);

ScaledScalar bosonicSphereMoment(const std::vector<int>& alpha);
ScaledScalar berezinSphereOracle(const Polynomial& f, const Frame& frame);
ScaledScalar fischerRouteIntegral(const Polynomial& f, const Frame& frame);
ScaledScalar sphereBilinear(const Polynomial& f, const Polynomial& g, const Frame& frame);

struct MeanResult {
  Polynomial poly;  // in the doubled spec, free of y
  int pi_exponent = 0;
};

/// Copies a polynomial on R^{m|2n} into the x-block of the doubled spec.
Polynomial embedInDoubled(const Polynomial& f, const SpecPtr& doubled);
SpecPtr doubledSpec(int m, int n);

MeanResult sphereMean(const Polynomial& f, const Frame& frame);
/// sum_j 2 / (4^j j! Gamma(j + M/2)) L^{2j} lap^j f, in the doubled spec.
MeanResult meanSeries(const Polynomial& f, const Frame& frame);
/// [lap_x - d_L^2 - (M-1)/L d_L] applied to the mean; identically zero in theory.
Polynomial darbouxResidual(const Polynomial& f, const Frame& frame);

}  // namespace superharm
