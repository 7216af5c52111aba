#pragma once

// Exact arithmetic: GMP-backed rationals, half-integer gamma bookkeeping and
// exact linear algebra over Q (dense row reduction plus a sparse semi-echelon
// solver used by the graded-space machinery).

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace superharm {

using BigInt = mpz_class;

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact fraction, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& v) : q_(v) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rational fraction(long num, long den);
  /// Parses "n" or "n/d" with an optional sign.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool isZero() const { return sgn(q_) == 0; }
  bool isInteger() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  std::string str() const;
  double approx() const { return q_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

BigInt factorial(long n);
/// Binomial coefficient with C(a,b) = 0 whenever b < 0 or b > a (a may be negative: 0).
BigInt binomial(long a, long b);

/// A number of the form twice/2.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt integer(int v) { return HalfInt{2 * v}; }
  static constexpr HalfInt halves(int t) { return HalfInt{t}; }
  constexpr bool isInteger() const { return twice % 2 == 0; }
  /// True for 0, -1, -2, ...
  constexpr bool isPole() const { return isInteger() && twice <= 0; }
  Rational value() const { return Rational::fraction(twice, 2); }
  constexpr HalfInt operator+(int k) const { return HalfInt{twice + 2 * k}; }
  constexpr HalfInt operator-(int k) const { return HalfInt{twice - 2 * k}; }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  std::string str() const;
};

/// Gamma at a half-integer: coeff * pi^(sqrt_pi_power/2), or a pole.
struct GammaValue {
  Rational coeff;
  int sqrt_pi_power = 0;
  bool is_pole = false;
};

GammaValue gamma(HalfInt s);

/// Gamma(top)/Gamma(bottom) for top - bottom integral, as the exact rising
/// (or falling) product. A pole in the bottom alone gives 0.
Rational gammaRatio(HalfInt top, HalfInt bottom);

/// a(a-1)...(a-l+1)/l!
Rational genBinomial(const Rational& a, int l);
inline Rational genBinomial(HalfInt a, int l) { return genBinomial(a.value(), l); }

// ---------------------------------------------------------------------------
// Dense matrices

using RatVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix identity(std::size_t n);
  static RatMatrix fromRows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;

  RatMatrix transpose() const;
  bool isZero() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::vector<RatVector> nullspace(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Basis (row-reduced) for span(a) + span(b).
std::vector<RatVector> subspaceSum(const std::vector<RatVector>& a, const std::vector<RatVector>& b);
/// Basis of span(a) ∩ span(b).
std::vector<RatVector> subspaceIntersect(const std::vector<RatVector>& a,
                                         const std::vector<RatVector>& b);
bool contains(const RatVector& v, const std::vector<RatVector>& basis);

// ---------------------------------------------------------------------------
// Sparse vectors and the semi-echelon solver

template <class Key>
using SparseVec = std::map<Key, Rational>;

template <class Key>
void axpy(SparseVec<Key>& y, const Rational& a, const SparseVec<Key>& x) {
  for (const auto& [k, v] : x) {
    auto [it, fresh] = y.try_emplace(k);
    it->second += a * v;
    if (it->second.isZero()) y.erase(it);
  }
}

/// Incrementally maintained echelon basis of a span of sparse vectors.
/// Each stored row has a distinct pivot (its largest key, coefficient 1);
/// rows are not mutually reduced, which keeps fill-in local. When tracking
/// is on, every row remembers its expansion in the inserted vectors.
template <class Key>
class SparseEchelon {
 public:
  explicit SparseEchelon(bool track = false) : track_(track) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Returns true if v was independent of the current span.
  bool insert(SparseVec<Key> v) {
    SparseVec<std::size_t> combo;
    if (track_) combo.emplace(inserted_, Rational(1));
    ++inserted_;
    reduceInPlace(v, track_ ? &combo : nullptr);
    if (v.empty()) return false;
    Rational lead = v.rbegin()->second;
    Rational inv = Rational(1) / lead;
    for (auto& [k, c] : v) c *= inv;
    if (track_)
      for (auto& [k, c] : combo) c *= inv;
    Key pivot = v.rbegin()->first;
    rows_.emplace(std::move(pivot), Row{std::move(v), std::move(combo)});
    return true;
  }

  bool contains(SparseVec<Key> v) const {
    reduceInPlace(v, nullptr);
    return v.empty();
  }

  /// Remainder of v modulo the span.
  SparseVec<Key> reduce(SparseVec<Key> v) const {
    reduceInPlace(v, nullptr);
    return v;
  }

  /// Expansion of v in the inserted vectors (requires tracking), or nullopt
  /// when v is outside the span.
  std::optional<SparseVec<std::size_t>> coordinates(SparseVec<Key> v) const {
    if (!track_) throw std::logic_error("SparseEchelon: coordinates need tracking");
    // v - sum c_r row_r = 0 and row_r = sum combo_r[i] e_i
    SparseVec<std::size_t> acc;
    reduceInPlace(v, nullptr, &acc);
    if (!v.empty()) return std::nullopt;
    return acc;
  }

 private:
  struct Row {
    SparseVec<Key> vec;
    SparseVec<std::size_t> combo;
  };

  void reduceInPlace(SparseVec<Key>& v, SparseVec<std::size_t>* combo,
                     SparseVec<std::size_t>* expansion = nullptr) const {
    auto it = v.end();
    while (it != v.begin()) {
      --it;
      auto r = rows_.find(it->first);
      if (r == rows_.end()) continue;
      const Key k = it->first;
      const Rational c = it->second;
      axpy(v, -c, r->second.vec);
      if (combo) axpy(*combo, -c, r->second.combo);
      if (expansion) axpy(*expansion, c, r->second.combo);
      it = v.lower_bound(k);
    }
  }

  bool track_;
  std::size_t inserted_ = 0;
  std::map<Key, Row> rows_;
};

/// Kernel of a sparse matrix given by columns (row index -> value). The
/// matrix is split into connected components of its row/column incidence
/// graph and each component is row-reduced densely.
std::vector<SparseVec<std::size_t>> sparseNullspace(const std::vector<SparseVec<std::size_t>>& columns);

}  // namespace superharm
