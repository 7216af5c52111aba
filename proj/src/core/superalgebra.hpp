#pragma once

// Sparse superpolynomials over named blocks of commuting and anticommuting
// variables.

#include "exact.hpp"

#include <array>
#include <bit>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace superharm {

constexpr int kMaxBosonic = 24;
constexpr int kMaxFermionic = 64;

struct BlockSpec {
  std::string name;
  int bosonic = 0;
  int fermionic = 0;
  std::string bos_prefix;
  std::string ferm_prefix;
  /// A single bosonic variable named by its bare prefix.
  bool unindexed = false;
  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// A variable: its class and its global slot within that class.
struct VarRef {
  bool fermionic = false;
  int slot = 0;
  friend bool operator==(VarRef, VarRef) = default;
};

class VarSpec;
using SpecPtr = std::shared_ptr<const VarSpec>;

class VarSpec {
 public:
  explicit VarSpec(std::vector<BlockSpec> blocks);

  /// One block "x" with variables x1..xm and e1..e2n.
  static SpecPtr superspace(int m, int n);
  /// Blocks "x" (x, e), "y" (y, f) and a single bosonic "L".
  static SpecPtr doubled(int m, int n);

  const std::vector<BlockSpec>& blocks() const { return blocks_; }
  int blockIndex(const std::string& name) const;
  const BlockSpec& block(int b) const { return blocks_.at(static_cast<std::size_t>(b)); }
  int bosOffset(int b) const { return bos_off_.at(static_cast<std::size_t>(b)); }
  int fermOffset(int b) const { return ferm_off_.at(static_cast<std::size_t>(b)); }
  int totalBosonic() const { return nbos_; }
  int totalFermionic() const { return nferm_; }

  std::optional<VarRef> find(const std::string& name) const;
  std::string name(VarRef v) const;

  friend bool operator==(const VarSpec& a, const VarSpec& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<BlockSpec> blocks_;
  std::vector<int> bos_off_, ferm_off_;
  int nbos_ = 0, nferm_ = 0;
};

/// x^alpha times an ascending product of distinct fermionic variables.
struct Monomial {
  std::uint8_t deg = 0;
  std::array<std::uint8_t, kMaxBosonic> exps{};
  std::uint64_t fermions = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  int fermionCount() const { return std::popcount(fermions); }
  int parity() const { return fermionCount() & 1; }
  bool has(int fslot) const { return (fermions >> fslot) & 1U; }
};

using Terms = SparseVec<Monomial>;

/// Sign of a*b for fermion masks a and b (0 if they overlap).
int fermionProductSign(std::uint64_t a, std::uint64_t b);

/// Left derivative of a monomial. Returns false when the result vanishes.
bool derivMonomial(const Monomial& mono, VarRef v, Monomial& out, long& factor);
/// Left multiplication by a variable. Returns false when the result vanishes.
bool mulVarMonomial(VarRef v, const Monomial& mono, Monomial& out, long& factor);
/// Product of two monomials with its sign. Returns false when it vanishes.
bool mulMonomials(const Monomial& a, const Monomial& b, Monomial& out, int& sign);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(SpecPtr spec) : spec_(std::move(spec)) {}
  Polynomial(SpecPtr spec, Terms terms);

  static Polynomial constant(SpecPtr spec, const Rational& c);
  static Polynomial variable(SpecPtr spec, VarRef v);
  static Polynomial monomial(SpecPtr spec, const Monomial& m, const Rational& c = Rational(1));
  static Polynomial parse(SpecPtr spec, std::string_view text);

  const SpecPtr& spec() const { return spec_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Degree of the single homogeneous component, or -1 if zero or mixed.
  int homogeneousDegree() const;
  /// 0 or 1 for homogeneous parity, -1 otherwise (or zero).
  int parity() const;
  Rational constantTerm() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  void addTerm(const Monomial& m, const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(int e) const;
  Polynomial leftDeriv(VarRef v) const;
  /// d_{e_{2n}} ... d_{e_1} over the fermions of one block (e_1 applied first).
  Polynomial berezin(int block) const;
  /// Replaces X_j by sum_k (S^{-1})_{jk} X_k in one block, S acting on (x, e).
  Polynomial substituteLinear(const RatMatrix& S, int block) const;

  std::string str() const;

 private:
  void requireSameSpec(const Polynomial& o) const;

  SpecPtr spec_;
  Terms terms_;
};

}  // namespace superharm
