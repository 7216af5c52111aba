#include "sphereint.hpp"

namespace superharm {

ScaledScalar& ScaledScalar::operator+=(const ScaledScalar& o) {
  if (o.coeff.isZero()) return *this;
  if (coeff.isZero()) {
    *this = o;
    return *this;
  }
  if (pi_exponent != o.pi_exponent) throw DomainError("ScaledScalar: adding different powers of pi");
  coeff += o.coeff;
  return *this;
}

std::string ScaledScalar::str() const {
  if (coeff.isZero() || pi_exponent == 0) return coeff.str();
  std::string c = coeff == Rational(1) ? "" : coeff.str() + "*";
  return c + "pi^" + std::to_string(pi_exponent);
}

int sphereUnit(int m, int n) {
  int M = m - 2 * n;
  return M >= 0 ? M / 2 : -((-M + 1) / 2);
}

namespace {

/// 2 / (4^k k! Gamma(k + M/2)) in units of pi^{floor(M/2)}.
Rational pizzettiWeight(int k, int M) {
  GammaValue g = gamma(HalfInt::halves(2 * k + M));
  if (g.is_pole) return Rational(0);
  if (g.sqrt_pi_power != (M & 1)) throw std::logic_error("pizzetti: unexpected sqrt(pi) content");
  BigInt four_k = 1;
  for (int i = 0; i < k; ++i) four_k *= 4;
  return Rational(2) / (Rational(BigInt(four_k * factorial(k))) * g.coeff);
}

bool touchesFrame(const Monomial& mono, const Frame& f) {
  for (int i = 0; i < f.m(); ++i)
    if (mono.exps[static_cast<std::size_t>(f.spec->bosOffset(f.block) + i)]) return true;
  std::uint64_t mask = ((1ULL << (2 * f.n())) - 1) << f.spec->fermOffset(f.block);
  return (mono.fermions & mask) != 0;
}

Polynomial atFrameZero(const Polynomial& f, const Frame& fr) {
  Terms t;
  for (const auto& [m, c] : f.terms())
    if (!touchesFrame(m, fr)) t.emplace(m, c);
  return Polynomial(f.spec(), std::move(t));
}

void requireFrame(const Polynomial& f, const Frame& fr) {
  if (f.spec() && f.spec() != fr.spec && !(*f.spec() == *fr.spec))
    throw DomainError("polynomial does not live on this superspace");
}

}  // namespace

Polynomial pizzettiPartial(const Polynomial& f, const Frame& over, int& unit) {
  if (over.m() == 0) throw DomainError("supersphere integration requires m != 0");
  requireFrame(f, over);
  const int M = over.superdim();
  unit = sphereUnit(over.m(), over.n());
  LinearOp lap = laplacian(over);
  Polynomial acc(over.spec);
  Polynomial g = f;
  for (int k = 0; !g.isZero(); ++k) {
    Rational w = pizzettiWeight(k, M);
    if (!w.isZero()) acc += w * atFrameZero(g, over);
    g = lap(g);
  }
  return acc;
}

ScaledScalar pizzetti(const Polynomial& f, const Frame& frame) {
  int unit = 0;
  Polynomial p = pizzettiPartial(f, frame, unit);
  return ScaledScalar{p.constantTerm(), unit};
}

ScaledScalar bosonicSphereMoment(const std::vector<int>& alpha) {
  const int m = static_cast<int>(alpha.size());
  if (m < 1) throw DomainError("bosonicSphereMoment: m >= 1 required");
  const int unit = m / 2;
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw DomainError("bosonicSphereMoment: negative exponent");
    if (a % 2) return ScaledScalar{Rational(0), unit};
    total += a;
  }
  Rational c(2);
  int sqrt_pi = 0;
  for (int a : alpha) {
    GammaValue g = gamma(HalfInt::halves(a + 1));
    c *= g.coeff;
    sqrt_pi += g.sqrt_pi_power;
  }
  GammaValue d = gamma(HalfInt::halves(total + m));
  c /= d.coeff;
  sqrt_pi -= d.sqrt_pi_power;
  if (sqrt_pi != 2 * unit) throw std::logic_error("bosonicSphereMoment: unexpected sqrt(pi) content");
  return ScaledScalar{c, unit};
}

ScaledScalar berezinSphereOracle(const Polynomial& f, const Frame& frame) {
  const int m = frame.m(), n = frame.n();
  if (m < 1) throw DomainError("berezinSphereOracle: m >= 1 required");
  requireFrame(f, frame);
  const SpecPtr& spec = frame.spec;
  Polynomial t2 = thetaSquaredPoly(frame);
  std::vector<Polynomial> t2pow{Polynomial::constant(spec, 1)};
  for (int j = 1; j <= n; ++j) t2pow.push_back(t2pow.back() * t2);

  // (1 - theta^2)^{m/2 - 1}, finite because theta^{2(n+1)} = 0
  Polynomial weight(spec);
  HalfInt a = HalfInt::halves(m - 2);
  for (int l = 0; l <= n; ++l) {
    Rational c = genBinomial(a, l);
    if (l & 1) c = -c;
    weight += c * t2pow[static_cast<std::size_t>(l)];
  }

  const int unit = sphereUnit(m, n);
  ScaledScalar total{Rational(0), unit};
  for (const auto& [mono, c] : f.terms()) {
    int d = 0;
    for (int i = 0; i < m; ++i) d += mono.exps[static_cast<std::size_t>(spec->bosOffset(frame.block) + i)];
    // phi#: sum_j (-1)^j theta^{2j}/j! (d/dr^2)^j, with (d/dr^2)^j f_d = prod_{i<j}(d/2 - i) f_d at r = 1
    Polynomial sharp(spec);
    Rational falling(1);
    for (int j = 0; j <= n; ++j) {
      if (j > 0) falling *= Rational::fraction(d, 2) - Rational(j - 1);
      Rational w = falling / Rational(factorial(j));
      if (j & 1) w = -w;
      sharp += w * t2pow[static_cast<std::size_t>(j)];
    }
    Polynomial integrand = weight * sharp * Polynomial::monomial(spec, mono, c);
    Polynomial reduced = integrand.berezin(frame.block);
    for (const auto& [bm, bc] : reduced.terms()) {
      std::vector<int> alpha(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) alpha[static_cast<std::size_t>(i)] = bm.exps[static_cast<std::size_t>(spec->bosOffset(frame.block) + i)];
      ScaledScalar mom = bosonicSphereMoment(alpha);
      // pi^{-n} from the Berezin normalization
      total += ScaledScalar{bc * mom.coeff, mom.pi_exponent - n};
    }
  }
  total.pi_exponent = unit;
  return total;
}

namespace {

struct FischerJoint {
  GradedSpace joint;
  std::size_t constant_index = 0;  // index of R^d in the joint basis
};

FischerJoint fischerJoint(const Frame& f, int d) {
  static std::mutex mu;
  static std::map<std::tuple<const VarSpec*, int, int>, std::pair<SpecPtr, FischerJoint>> cache;
  auto key = std::make_tuple(f.spec.get(), f.block, d);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.second;
  }
  FischerJoint fj;
  std::vector<Polynomial> all;
  for (const auto& piece : fischer(f, d)) {
    if (piece.harmonic_degree == 0) fj.constant_index = all.size();
    for (const auto& b : piece.space.basis()) all.push_back(b);
  }
  fj.joint = GradedSpace(f.spec, d, std::move(all));
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(key, f.spec, std::move(fj)).first->second.second;
}

}  // namespace

ScaledScalar fischerRouteIntegral(const Polynomial& f, const Frame& frame) {
  if (frame.m() == 0) throw DomainError("supersphere integration requires m != 0");
  const int M = frame.superdim();
  if (M <= 0 && M % 2 == 0)
    throw DomainError("Fischer route unavailable: M = " + std::to_string(M) + " is a nonpositive even integer");
  requireFrame(f, frame);
  std::map<int, Terms> byDegree;
  for (const auto& [m, c] : f.terms()) byDegree[m.deg].emplace(m, c);
  ScaledScalar one = pizzetti(Polynomial::constant(frame.spec, 1), frame);
  Rational c(0);
  for (auto& [d, terms] : byDegree) {
    if (d % 2) continue;
    FischerJoint fj = fischerJoint(frame, d);
    auto coords = fj.joint.coordinates(Polynomial(frame.spec, std::move(terms)));
    if (!coords) throw std::logic_error("Fischer route: polynomial outside the Fischer span");
    auto it = coords->find(fj.constant_index);
    if (it != coords->end()) c += it->second;
  }
  return c * one;
}

ScaledScalar sphereBilinear(const Polynomial& f, const Polynomial& g, const Frame& frame) {
  return pizzetti(f * g, frame);
}

SpecPtr doubledSpec(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SpecPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, n}];
  if (!slot) slot = VarSpec::doubled(m, n);
  return slot;
}

Polynomial embedInDoubled(const Polynomial& f, const SpecPtr& doubled) {
  // The x-block occupies the leading slots of both variable classes.
  return Polynomial(doubled, f.terms());
}

MeanResult sphereMean(const Polynomial& f, const Frame& frame) {
  const int m = frame.m(), n = frame.n();
  if (m == 0) throw DomainError("spherical mean requires m != 0");
  requireFrame(f, frame);
  SpecPtr D = doubledSpec(m, n);
  Frame fx{D, 0}, fy{D, 1};
  Polynomial L = Polynomial::variable(D, VarRef{false, D->bosOffset(2)});
  std::vector<Polynomial> shifted;  // X_i + L Y_i
  for (int i = 1; i <= fx.size(); ++i)
    shifted.push_back(Polynomial::variable(D, fx.var(i)) + L * Polynomial::variable(D, fy.var(i)));

  Polynomial g(D);
  for (const auto& [mono, c] : f.terms()) {
    Polynomial t = Polynomial::constant(D, c);
    for (int i = 0; i < m; ++i) {
      int e = mono.exps[static_cast<std::size_t>(i)];
      if (e) t = t * shifted[static_cast<std::size_t>(i)].pow(e);
    }
    for (std::uint64_t mask = mono.fermions; mask; mask &= mask - 1)
      t = t * shifted[static_cast<std::size_t>(m + std::countr_zero(mask))];
    g += t;
  }
  MeanResult r;
  r.poly = pizzettiPartial(g, fy, r.pi_exponent);
  return r;
}

MeanResult meanSeries(const Polynomial& f, const Frame& frame) {
  if (frame.m() == 0) throw DomainError("spherical mean requires m != 0");
  requireFrame(f, frame);
  const int M = frame.superdim();
  SpecPtr D = doubledSpec(frame.m(), frame.n());
  Polynomial L2 = Polynomial::variable(D, VarRef{false, D->bosOffset(2)}).pow(2);
  LinearOp lap = laplacian(frame);
  MeanResult r{Polynomial(D), sphereUnit(frame.m(), frame.n())};
  Polynomial g = f;
  Polynomial lpow = Polynomial::constant(D, 1);
  for (int j = 0; !g.isZero(); ++j) {
    Rational w = pizzettiWeight(j, M);
    if (!w.isZero()) r.poly += w * (lpow * embedInDoubled(g, D));
    g = lap(g);
    lpow = lpow * L2;
  }
  return r;
}

Polynomial darbouxResidual(const Polynomial& f, const Frame& frame) {
  MeanResult mean = sphereMean(f, frame);
  const SpecPtr& D = mean.poly.spec();
  const int M = frame.superdim();
  Frame fx{D, 0};
  VarRef L{false, D->bosOffset(2)};
  Polynomial dL = mean.poly.leftDeriv(L);
  Polynomial dLL = dL.leftDeriv(L);
  Terms over;  // (1/L) d_L
  for (const auto& [mono, c] : dL.terms()) {
    Monomial q = mono;
    auto& e = q.exps[static_cast<std::size_t>(L.slot)];
    if (e == 0) throw std::logic_error("spherical mean is not even in L");
    --e;
    --q.deg;
    over.emplace(q, c);
  }
  return laplacian(fx)(mean.poly) - dLL - Rational(M - 1) * Polynomial(D, std::move(over));
}

}  // namespace superharm
