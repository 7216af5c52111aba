#include "space.hpp"

namespace superharm {

Frame Frame::superspace(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SpecPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, n}];
  if (!slot) slot = VarSpec::superspace(m, n);
  return Frame{slot, 0};
}

VarRef Frame::var(int i) const {
  if (i < 1 || i > size()) throw DomainError("variable index out of range: " + std::to_string(i));
  if (i <= m()) return VarRef{false, spec->bosOffset(block) + i - 1};
  return VarRef{true, spec->fermOffset(block) + i - m() - 1};
}

namespace {

void compositions(int total, int parts, int first_slot, Monomial& cur, std::vector<Monomial>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  if (parts == 1) {
    cur.exps[static_cast<std::size_t>(first_slot)] = static_cast<std::uint8_t>(total);
    out.push_back(cur);
    cur.exps[static_cast<std::size_t>(first_slot)] = 0;
    return;
  }
  for (int e = total; e >= 0; --e) {
    cur.exps[static_cast<std::size_t>(first_slot)] = static_cast<std::uint8_t>(e);
    compositions(total - e, parts - 1, first_slot + 1, cur, out);
  }
  cur.exps[static_cast<std::size_t>(first_slot)] = 0;
}

}  // namespace

std::vector<Monomial> enumerateMonomials(const Frame& f, int k, VarClass which) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  if (k > 255) throw DomainError("degree too large");
  const int m = which == VarClass::Fermionic ? 0 : f.m();
  const int nf = which == VarClass::Bosonic ? 0 : 2 * f.n();
  const int boff = f.spec->bosOffset(f.block), foff = f.spec->fermOffset(f.block);
  if (nf > 30) throw DomainError("too many fermionic variables to enumerate");
  for (std::uint64_t sub = 0; sub < (1ULL << nf); ++sub) {
    int c = std::popcount(sub);
    if (c > k) continue;
    if (m == 0 && c != k) continue;
    Monomial cur;
    cur.deg = static_cast<std::uint8_t>(k);
    cur.fermions = sub << foff;
    compositions(k - c, m, boff, cur, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GradedSpace::GradedSpace(SpecPtr spec, int degree, std::vector<Polynomial> basis)
    : state_(std::make_shared<State>()) {
  state_->spec = std::move(spec);
  state_->degree = degree;
  state_->basis = std::move(basis);
  for (const auto& b : state_->basis) {
    if (b.isZero()) throw DomainError("GradedSpace: zero basis vector");
    if (b.homogeneousDegree() != degree) throw DomainError("GradedSpace: basis vector of wrong degree");
  }
}

GradedSpace GradedSpace::fromMonomials(SpecPtr spec, int degree, const std::vector<Monomial>& monos) {
  std::vector<Polynomial> basis;
  basis.reserve(monos.size());
  for (const auto& m : monos) basis.push_back(Polynomial::monomial(spec, m));
  GradedSpace s(spec, degree, std::move(basis));
  s.state_->monomial = true;
  for (std::size_t i = 0; i < monos.size(); ++i) s.state_->index.emplace(monos[i], i);
  return s;
}

void GradedSpace::ensureEchelon() const {
  std::call_once(state_->built, [this] {
    auto ech = std::make_unique<SparseEchelon<Monomial>>(true);
    for (const auto& b : state_->basis)
      if (!ech->insert(b.terms())) throw DomainError("GradedSpace: basis is linearly dependent");
    state_->echelon = std::move(ech);
  });
}

std::optional<SparseVec<std::size_t>> GradedSpace::coordinates(const Polynomial& v) const {
  if (!state_) {
    if (v.isZero()) return SparseVec<std::size_t>{};
    return std::nullopt;
  }
  if (state_->monomial) {
    SparseVec<std::size_t> out;
    for (const auto& [m, c] : v.terms()) {
      auto it = state_->index.find(m);
      if (it == state_->index.end()) return std::nullopt;
      out.emplace(it->second, c);
    }
    return out;
  }
  ensureEchelon();
  return state_->echelon->coordinates(v.terms());
}

RatVector GradedSpace::denseCoordinates(const Polynomial& v) const {
  auto c = coordinates(v);
  if (!c) throw DomainError("GradedSpace: vector outside the span");
  RatVector out(dim());
  for (const auto& [i, x] : *c) out[i] = x;
  return out;
}

Polynomial GradedSpace::combine(const SparseVec<std::size_t>& coords) const {
  Polynomial p(spec());
  for (const auto& [i, c] : coords) p += c * at(i);
  return p;
}

Polynomial GradedSpace::combine(const RatVector& coords) const {
  Polynomial p(spec());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].isZero()) p += coords[i] * at(i);
  return p;
}

}  // namespace superharm
