#include "harmonic.hpp"

#include <tuple>

namespace superharm {

namespace {

enum class Kind { Pk, Hk, Hb, Hf, Decomp };

template <class V>
class Memo {
 public:
  template <class Fn>
  V get(const Frame& f, Kind kind, int k, Fn&& compute) {
    Key key{f.spec.get(), f.block, static_cast<int>(kind), k};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second.second;
    }
    V v = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return map_.try_emplace(key, f.spec, std::move(v)).first->second.second;
  }

 private:
  using Key = std::tuple<const VarSpec*, int, int, int>;
  std::mutex mu_;
  std::map<Key, std::pair<SpecPtr, V>> map_;
};

Memo<GradedSpace>& spaceMemo() {
  static Memo<GradedSpace> memo;
  return memo;
}

}  // namespace

BigInt dimPk(int m, int n, int k) {
  if (k < 0) return 0;
  if (m == 0) return binomial(2 * n, k);
  BigInt d = 0;
  for (int i = 0; i <= std::min(k, 2 * n); ++i) d += binomial(2 * n, i) * binomial(k - i + m - 1, m - 1);
  return d;
}

BigInt dimHkFormula(int m, int n, int k) {
  if (m == 0) throw DomainError("dimension formula requires m != 0");
  if (k < 0) return 0;
  BigInt d = 0;
  for (int i = 0; i <= std::min(k, 2 * n); ++i) d += binomial(2 * n, i) * binomial(k - i + m - 1, m - 1);
  for (int i = 0; i <= std::min(k - 2, 2 * n); ++i) d -= binomial(2 * n, i) * binomial(k - i + m - 3, m - 1);
  return d;
}

GradedSpace monomialBasisPk(const Frame& f, int k) {
  return spaceMemo().get(f, Kind::Pk, k, [&] { return GradedSpace::fromMonomials(f.spec, k, enumerateMonomials(f, k)); });
}

GradedSpace kernelOn(const LinearOp& op, SpecPtr spec, int degree, const std::vector<Monomial>& domain) {
  std::map<Monomial, std::size_t> rows;
  std::vector<SparseVec<std::size_t>> cols;
  cols.reserve(domain.size());
  for (const auto& mono : domain) {
    Terms img;
    op.applyTo(mono, Rational(1), img);
    SparseVec<std::size_t> col;
    for (const auto& [m, c] : img) col.emplace(rows.try_emplace(m, rows.size()).first->second, c);
    cols.push_back(std::move(col));
  }
  std::vector<Polynomial> basis;
  for (const auto& z : sparseNullspace(cols)) {
    Terms t;
    for (const auto& [i, c] : z) t.emplace(domain[i], c);
    basis.emplace_back(spec, std::move(t));
  }
  return GradedSpace(std::move(spec), degree, std::move(basis));
}

GradedSpace harmonics(const Frame& f, int k) {
  return spaceMemo().get(f, Kind::Hk, k, [&] { return kernelOn(laplacian(f), f.spec, k, enumerateMonomials(f, k)); });
}

GradedSpace bosonicHarmonics(const Frame& f, int p) {
  return spaceMemo().get(f, Kind::Hb, p, [&] {
    return kernelOn(laplacianBosonic(f), f.spec, p, enumerateMonomials(f, p, VarClass::Bosonic));
  });
}

GradedSpace fermionicHarmonics(const Frame& f, int q) {
  return spaceMemo().get(f, Kind::Hf, q, [&] {
    return kernelOn(laplacianFermionic(f), f.spec, q, enumerateMonomials(f, q, VarClass::Fermionic));
  });
}

namespace {

GradedSpace scaledSpace(const Polynomial& factor, const GradedSpace& s, int degree) {
  std::vector<Polynomial> basis;
  basis.reserve(s.dim());
  for (const auto& b : s.basis()) basis.push_back(factor * b);
  return GradedSpace(factor.spec(), degree, std::move(basis));
}

}  // namespace

std::vector<FischerPiece> fischer(const Frame& f, int k) {
  const int m = f.m(), n = f.n(), M = f.superdim();
  std::vector<FischerPiece> out;
  if (m == 0) {
    Polynomial t2 = thetaSquaredPoly(f);
    for (int j = 0; 2 * j <= k; ++j) {
      int h = k - 2 * j;
      if (h > n || j > n - h) continue;
      out.push_back({j, h, scaledSpace(t2.pow(j), fermionicHarmonics(f, h), k)});
    }
    return out;
  }
  if (M <= 0 && M % 2 == 0)
    throw DomainError("Fischer decomposition fails: superdimension M = " + std::to_string(M) +
                      " is a nonpositive even integer");
  Polynomial r2 = rSquaredPoly(f);
  for (int j = 0; 2 * j <= k; ++j) out.push_back({j, k - 2 * j, scaledSpace(r2.pow(j), harmonics(f, k - 2 * j), k)});
  return out;
}

Polynomial fkpq(const Frame& f, int k, int p, int q) {
  const int m = f.m(), n = f.n();
  if (q < 0 || q > n || k < 0 || k > n - q || p < 0)
    throw DomainError("fkpq: parameters out of range (need 0 <= q <= n, 0 <= k <= n - q, p >= 0)");
  Polynomial r2 = rSquaredBosonicPoly(f), t2 = thetaSquaredPoly(f);
  HalfInt top = HalfInt::halves(m + 2 * p + 2 * k);
  Polynomial out(f.spec);
  for (int s = 0; s <= k; ++s) {
    Rational a = Rational(binomial(k, s)) * Rational(factorial(n - q - s)) / Rational(factorial(n - q - k)) *
                 gammaRatio(top, top - s);
    out += a * (r2.pow(k - s) * t2.pow(s));
  }
  return out;
}

std::vector<HkComponent> decomposeHk(const Frame& f, int k) {
  const int n = f.n();
  std::vector<HkComponent> out;
  for (int j = 0; j <= std::min(n, k); ++j)
    for (int l = 0; l <= std::min(n - j, (k - j) / 2); ++l) {
      int p = k - 2 * l - j;
      GradedSpace hb = bosonicHarmonics(f, p), hf = fermionicHarmonics(f, j);
      if (hb.dim() == 0 || hf.dim() == 0) continue;
      Polynomial fac = fkpq(f, l, p, j);
      std::vector<Polynomial> basis;
      basis.reserve(hb.dim() * hf.dim());
      for (const auto& b : hb.basis()) {
        Polynomial fb = fac * b;
        for (const auto& c : hf.basis()) basis.push_back(fb * c);
      }
      out.push_back({l, p, j, GradedSpace(f.spec, k, std::move(basis))});
    }
  return out;
}

HkDecomposition decomposition(const Frame& f, int k) {
  static std::mutex mu;
  static std::map<std::tuple<const VarSpec*, int, int>, std::pair<SpecPtr, HkDecomposition>> cache;
  auto key = std::make_tuple(f.spec.get(), f.block, k);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.second;
  }
  HkDecomposition d;
  d.components = decomposeHk(f, k);
  std::vector<Polynomial> all;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    d.offset.push_back(all.size());
    for (const auto& b : d.components[c].space.basis()) {
      all.push_back(b);
      d.owner.push_back(c);
    }
  }
  d.joint = GradedSpace(f.spec, k, std::move(all));
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(key, f.spec, std::move(d)).first->second.second;
}

std::vector<Polynomial> HkDecomposition::split(const Polynomial& v) const {
  auto coords = joint.coordinates(v);
  if (!coords) throw DomainError("split: vector is not in the span of the components");
  std::vector<Polynomial> parts(components.size(), Polynomial(joint.spec()));
  for (const auto& [i, c] : *coords) parts[owner[i]] += c * joint.at(i);
  return parts;
}

std::vector<std::size_t> HkDecomposition::support(const Polynomial& v) const {
  auto coords = joint.coordinates(v);
  if (!coords) throw DomainError("support: vector is not in the span of the components");
  std::vector<std::size_t> out;
  for (const auto& [i, c] : *coords)
    if (out.empty() || out.back() != owner[i]) out.push_back(owner[i]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LinearOp projector(const Frame& f, int k, int r, int s) {
  const int m = f.m(), n = f.n();
  const int p = k - 2 * r - s;
  if (r < 0 || s < 0 || p < 0 || s > std::min(n, k) || r > n - s)
    throw DomainError("projector: (" + std::to_string(r) + "," + std::to_string(s) + ") is not a component of H_" +
                      std::to_string(k));
  LinearOp lbb = laplaceBeltrami(f, LBPart::Bosonic), lbf = laplaceBeltrami(f, LBPart::Fermionic);
  LinearOp id = LinearOp::identity(f.spec);
  LinearOp q = id;
  for (int i = 0; i <= k; ++i) {
    if (i == p) continue;
    long den = static_cast<long>(i - p) * (i + p + m - 2);
    if (den == 0)
      throw EigenvalueCollision("projector: bosonic eigenvalues collide at i = " + std::to_string(i) +
                                " (m = " + std::to_string(m) + ")");
    q = compose(Rational::fraction(1, den) * (lbb + Rational(static_cast<long>(i) * (m - 2 + i)) * id), q);
  }
  for (int j = 0; j <= std::min(n, k); ++j) {
    if (j == s) continue;
    long den = static_cast<long>(j - s) * (j + s - 2 * n - 2);
    if (den == 0)
      throw EigenvalueCollision("projector: fermionic eigenvalues collide at j = " + std::to_string(j));
    q = compose(Rational::fraction(1, den) * (lbf + Rational(static_cast<long>(j) * (-2 * n - 2 + j)) * id), q);
  }
  return q.renamed("Q" + std::to_string(k) + "_" + std::to_string(r) + "," + std::to_string(s));
}

}  // namespace superharm
