#include "superalgebra.hpp"

#include <cctype>

namespace superharm {

VarSpec::VarSpec(std::vector<BlockSpec> blocks) : blocks_(std::move(blocks)) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (blocks_[j].name == blocks_[i].name) throw DomainError("VarSpec: duplicate block " + blocks_[i].name);
    bos_off_.push_back(nbos_);
    ferm_off_.push_back(nferm_);
    nbos_ += blocks_[i].bosonic;
    nferm_ += blocks_[i].fermionic;
  }
  if (nbos_ > kMaxBosonic) throw DomainError("VarSpec: too many bosonic variables");
  if (nferm_ > kMaxFermionic) throw DomainError("VarSpec: too many fermionic variables");
}

SpecPtr VarSpec::superspace(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("superspace: negative dimension");
  return std::make_shared<const VarSpec>(std::vector<BlockSpec>{{"x", m, 2 * n, "x", "e"}});
}

SpecPtr VarSpec::doubled(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("superspace: negative dimension");
  return std::make_shared<const VarSpec>(std::vector<BlockSpec>{
      {"x", m, 2 * n, "x", "e"}, {"y", m, 2 * n, "y", "f"}, {"L", 1, 0, "L", "", true}});
}

int VarSpec::blockIndex(const std::string& name) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].name == name) return static_cast<int>(i);
  throw DomainError("VarSpec: unknown block " + name);
}

std::optional<VarRef> VarSpec::find(const std::string& name) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& bl = blocks_[b];
    auto match = [&](const std::string& prefix, int count) -> int {
      if (count == 0 || name.compare(0, prefix.size(), prefix) != 0) return 0;
      std::string rest = name.substr(prefix.size());
      if (bl.unindexed) return rest.empty() ? 1 : 0;
      if (rest.empty() || rest[0] == '0') return 0;
      for (char c : rest)
        if (!std::isdigit(static_cast<unsigned char>(c))) return 0;
      if (rest.size() > 3) return 0;
      int idx = std::stoi(rest);
      return idx <= count ? idx : 0;
    };
    if (int i = match(bl.bos_prefix, bl.bosonic)) return VarRef{false, bos_off_[b] + i - 1};
    if (int i = match(bl.ferm_prefix, bl.fermionic)) return VarRef{true, ferm_off_[b] + i - 1};
  }
  return std::nullopt;
}

std::string VarSpec::name(VarRef v) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& bl = blocks_[b];
    int off = v.fermionic ? ferm_off_[b] : bos_off_[b];
    int cnt = v.fermionic ? bl.fermionic : bl.bosonic;
    if (v.slot >= off && v.slot < off + cnt) {
      const std::string& prefix = v.fermionic ? bl.ferm_prefix : bl.bos_prefix;
      if (bl.unindexed && !v.fermionic) return prefix;
      return prefix + std::to_string(v.slot - off + 1);
    }
  }
  throw DomainError("VarSpec: variable out of range");
}

// ---------------------------------------------------------------------------

namespace {

inline std::uint64_t below(int slot) { return slot >= 64 ? ~0ULL : ((1ULL << slot) - 1); }

}  // namespace

int fermionProductSign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  int swaps = 0;
  while (b) {
    int j = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(a & ~below(j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

bool derivMonomial(const Monomial& mono, VarRef v, Monomial& out, long& factor) {
  if (v.fermionic) {
    if (!mono.has(v.slot)) return false;
    out = mono;
    out.fermions &= ~(1ULL << v.slot);
    --out.deg;
    factor = (std::popcount(mono.fermions & below(v.slot)) & 1) ? -1 : 1;
    return true;
  }
  auto e = mono.exps[static_cast<std::size_t>(v.slot)];
  if (e == 0) return false;
  out = mono;
  --out.exps[static_cast<std::size_t>(v.slot)];
  --out.deg;
  factor = e;
  return true;
}

bool mulVarMonomial(VarRef v, const Monomial& mono, Monomial& out, long& factor) {
  out = mono;
  ++out.deg;
  if (v.fermionic) {
    if (mono.has(v.slot)) return false;
    out.fermions |= 1ULL << v.slot;
    factor = (std::popcount(mono.fermions & below(v.slot)) & 1) ? -1 : 1;
    return true;
  }
  if (out.exps[static_cast<std::size_t>(v.slot)] == 255) throw DomainError("exponent overflow");
  ++out.exps[static_cast<std::size_t>(v.slot)];
  factor = 1;
  return true;
}

bool mulMonomials(const Monomial& a, const Monomial& b, Monomial& out, int& sign) {
  sign = fermionProductSign(a.fermions, b.fermions);
  if (sign == 0) return false;
  out.fermions = a.fermions | b.fermions;
  if (static_cast<int>(a.deg) + b.deg > 255) throw DomainError("degree overflow");
  out.deg = static_cast<std::uint8_t>(a.deg + b.deg);
  for (int i = 0; i < kMaxBosonic; ++i) {
    int e = a.exps[static_cast<std::size_t>(i)] + b.exps[static_cast<std::size_t>(i)];
    if (e > 255) throw DomainError("exponent overflow");
    out.exps[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
  }
  return true;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(SpecPtr spec, Terms terms) : spec_(std::move(spec)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.isZero(); });
}

Polynomial Polynomial::constant(SpecPtr spec, const Rational& c) {
  return monomial(std::move(spec), Monomial{}, c);
}

Polynomial Polynomial::variable(SpecPtr spec, VarRef v) {
  Monomial out;
  long f = 1;
  mulVarMonomial(v, Monomial{}, out, f);
  return monomial(std::move(spec), out);
}

Polynomial Polynomial::monomial(SpecPtr spec, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(spec));
  p.addTerm(m, c);
  return p;
}

int Polynomial::homogeneousDegree() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.deg;
  return terms_.rbegin()->first.deg == d ? d : -1;
}

int Polynomial::parity() const {
  int p = -1;
  for (const auto& [m, c] : terms_) {
    if (p == -1) p = m.parity();
    else if (p != m.parity()) return -1;
  }
  return p;
}

Rational Polynomial::constantTerm() const { return coefficient(Monomial{}); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::requireSameSpec(const Polynomial& o) const {
  if (spec_ && o.spec_ && spec_ != o.spec_ && !(*spec_ == *o.spec_))
    throw DomainError("Polynomial: variable specification mismatch");
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
  if (c.isZero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  requireSameSpec(o);
  if (!spec_) spec_ = o.spec_;
  axpy(terms_, Rational(1), o.terms_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  requireSameSpec(o);
  if (!spec_) spec_ = o.spec_;
  axpy(terms_, Rational(-1), o.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.requireSameSpec(b);
  Polynomial r(a.spec_ ? a.spec_ : b.spec_);
  Monomial out;
  int sign = 0;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      if (mulMonomials(ma, mb, out, sign)) r.addTerm(out, sign > 0 ? ca * cb : -(ca * cb));
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("Polynomial: negative power");
  Polynomial r = constant(spec_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::leftDeriv(VarRef v) const {
  Polynomial r(spec_);
  Monomial out;
  long f = 0;
  for (const auto& [m, c] : terms_)
    if (derivMonomial(m, v, out, f)) r.addTerm(out, c * Rational(f));
  return r;
}

Polynomial Polynomial::berezin(int block) const {
  if (!spec_) return *this;
  const auto& bl = spec_->block(block);
  int off = spec_->fermOffset(block);
  Polynomial r = *this;
  for (int j = 0; j < bl.fermionic; ++j) r = r.leftDeriv(VarRef{true, off + j});
  return r;
}

Polynomial Polynomial::substituteLinear(const RatMatrix& S, int block) const {
  if (!spec_) return *this;
  const auto& bl = spec_->block(block);
  const int m = bl.bosonic, f = bl.fermionic, N = m + f;
  if (S.rows() != static_cast<std::size_t>(N) || S.cols() != static_cast<std::size_t>(N))
    throw DomainError("substituteLinear: matrix size does not match the block");
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if ((a < m) != (b < m) && !S.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)).isZero())
        throw DomainError("substituteLinear: matrix mixes bosonic and fermionic variables");
  auto inv = inverse(S);
  if (!inv) throw DomainError("substituteLinear: matrix is not invertible");

  auto ref = [&](int local) {
    return local < m ? VarRef{false, spec_->bosOffset(block) + local}
                     : VarRef{true, spec_->fermOffset(block) + local - m};
  };
  std::vector<Polynomial> image(static_cast<std::size_t>(N), Polynomial(spec_));
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) {
      const Rational& c = inv->at(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
      if (!c.isZero()) image[static_cast<std::size_t>(j)] += c * variable(spec_, ref(k));
    }

  Polynomial result(spec_);
  for (const auto& [mono, c] : terms_) {
    // Split off the variables of this block; the rest is carried along unchanged.
    Monomial rest = mono;
    Polynomial prod = constant(spec_, 1);
    for (int j = 0; j < m; ++j) {
      auto slot = static_cast<std::size_t>(spec_->bosOffset(block) + j);
      int e = rest.exps[slot];
      if (e == 0) continue;
      rest.exps[slot] = 0;
      rest.deg = static_cast<std::uint8_t>(rest.deg - e);
      prod = prod * image[static_cast<std::size_t>(j)].pow(e);
    }
    // Fermions are replaced in place so the sign bookkeeping stays with the product order.
    Polynomial ferm = constant(spec_, 1);
    std::uint64_t mask = rest.fermions;
    Monomial bos_rest = rest;
    bos_rest.deg = static_cast<std::uint8_t>(bos_rest.deg - std::popcount(mask));
    bos_rest.fermions = 0;
    while (mask) {
      int s = std::countr_zero(mask);
      mask &= mask - 1;
      int local = s - spec_->fermOffset(block);
      if (local >= 0 && local < f) ferm = ferm * image[static_cast<std::size_t>(m + local)];
      else ferm = ferm * variable(spec_, VarRef{true, s});
    }
    result += c * (monomial(spec_, bos_rest) * prod * ferm);
  }
  return result;
}

// ---------------------------------------------------------------------------

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::vector<std::string> factors;
    for (int i = 0; i < kMaxBosonic; ++i) {
      int e = m.exps[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      std::string name = spec_->name(VarRef{false, i});
      factors.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    }
    for (std::uint64_t mask = m.fermions; mask; mask &= mask - 1)
      factors.push_back(spec_->name(VarRef{true, std::countr_zero(mask)}));

    Rational mag = c.sign() < 0 ? -c : c;
    if (first) out += c.sign() < 0 ? "-" : "";
    else out += c.sign() < 0 ? " - " : " + ";
    first = false;
    std::string body;
    if (factors.empty() || mag != Rational(1)) body = mag.str();
    for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
    out += body;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(SpecPtr spec, std::string_view text) : spec_(std::move(spec)), s_(text) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Polynomial acc(spec_);
    bool negate = false;
    if (peek('+') || peek('-')) {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    while (true) {
      Polynomial t = term();
      acc += negate ? -t : t;
      skip();
      if (pos_ == s_.size()) break;
      if (peek('+') || peek('-')) {
        negate = s_[pos_] == '-';
        ++pos_;
        continue;
      }
      throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
    }
    return acc;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  BigInt integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial item() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = integer();
      BigInt den = 1;
      if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return Polynomial::constant(spec_, Rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto v = spec_->find(name);
      if (!v) throw ParseError("unknown variable '" + name + "'", start);
      Polynomial p = Polynomial::variable(spec_, *v);
      if (peek('^')) {
        ++pos_;
        std::size_t at = pos_;
        BigInt e = integer();
        if (e < 1 || e > 255) throw ParseError("exponent out of range", at);
        p = p.pow(static_cast<int>(e.get_si()));
      }
      return p;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Polynomial term() {
    Polynomial t = item();
    while (peek('*')) {
      ++pos_;
      t = t * item();
    }
    return t;
  }

  SpecPtr spec_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(SpecPtr spec, std::string_view text) { return Parser(std::move(spec), text).run(); }

}  // namespace superharm
