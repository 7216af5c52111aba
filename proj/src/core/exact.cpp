#include "exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace superharm {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::fraction(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("Rational: cannot parse '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw DomainError("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

std::string HalfInt::str() const {
  if (isInteger()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

GammaValue gamma(HalfInt s) {
  if (s.isPole()) return GammaValue{Rational(0), 0, true};
  if (s.isInteger()) return GammaValue{Rational(factorial(s.twice / 2 - 1)), 0, false};
  // Gamma(1/2) = sqrt(pi); walk up or down with Gamma(s+1) = s Gamma(s).
  Rational c(1);
  HalfInt cur = HalfInt::halves(1);
  while (cur.twice < s.twice) {
    c *= cur.value();
    cur = cur + 1;
  }
  while (cur.twice > s.twice) {
    cur = cur - 1;
    c /= cur.value();
  }
  return GammaValue{c, 1, false};
}

Rational gammaRatio(HalfInt top, HalfInt bottom) {
  int diff = top.twice - bottom.twice;
  if (diff % 2 != 0) throw DomainError("gammaRatio: arguments differ by a non-integer");
  int d = diff / 2;
  Rational p(1);
  if (d >= 0) {
    for (int i = 0; i < d; ++i) p *= (bottom + i).value();
    return p;
  }
  for (int i = 0; i < -d; ++i) p *= (top + i).value();
  if (p.isZero())
    throw DomainError("gammaRatio: Gamma(" + top.str() + ") is a pole over a finite Gamma(" +
                      bottom.str() + ")");
  return Rational(1) / p;
}

Rational genBinomial(const Rational& a, int l) {
  if (l < 0) return Rational(0);
  Rational r(1);
  for (int i = 0; i < l; ++i) r *= a - Rational(i);
  return r / Rational(factorial(l));
}

// ---------------------------------------------------------------------------

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::fromRows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DomainError("RatMatrix: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<long>(r * cols_),
                   data_.begin() + static_cast<long>((r + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool RatMatrix::isZero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.isZero(); });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("RatMatrix: dimension mismatch in product");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(i, k);
      if (x.isZero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).isZero()) p.at(i, j) += x * b.at(k, j);
    }
  return p;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("RatMatrix: dimension mismatch");
  RatMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + (Rational(-1) * b); }

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).str();
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const RatMatrix& m) {
  RrefResult res{m, {}};
  RatMatrix& a = res.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a.at(p, c).isZero()) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(lead, j));
    Rational inv = Rational(1) / a.at(lead, c);
    for (std::size_t j = c; j < a.cols(); ++j) a.at(lead, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, c).isZero()) continue;
      Rational f = a.at(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a.at(lead, j).isZero()) a.at(r, j) -= f * a.at(lead, j);
    }
    res.pivots.push_back(c);
    ++lead;
  }
  return res;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVector> nullspace(const RatMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
  return inv;
}

namespace {

std::vector<RatVector> rowBasis(const std::vector<RatVector>& vs) {
  if (vs.empty()) return {};
  RrefResult r = rref(RatMatrix::fromRows(vs));
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) out.push_back(r.reduced.row(i));
  return out;
}

}  // namespace

std::vector<RatVector> subspaceSum(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
  std::vector<RatVector> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return rowBasis(all);
}

std::vector<RatVector> subspaceIntersect(const std::vector<RatVector>& a,
                                         const std::vector<RatVector>& b) {
  auto ba = rowBasis(a);
  auto bb = rowBasis(b);
  if (ba.empty() || bb.empty()) return {};
  std::size_t dim = ba.front().size();
  RatMatrix sys(dim, ba.size() + bb.size());
  for (std::size_t i = 0; i < ba.size(); ++i)
    for (std::size_t r = 0; r < dim; ++r) sys.at(r, i) = ba[i][r];
  for (std::size_t j = 0; j < bb.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) sys.at(r, ba.size() + j) = -bb[j][r];
  std::vector<RatVector> out;
  for (const auto& z : nullspace(sys)) {
    RatVector v(dim);
    for (std::size_t i = 0; i < ba.size(); ++i)
      if (!z[i].isZero())
        for (std::size_t r = 0; r < dim; ++r) v[r] += z[i] * ba[i][r];
    out.push_back(std::move(v));
  }
  return rowBasis(out);
}

bool contains(const RatVector& v, const std::vector<RatVector>& basis) {
  if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.isZero(); });
  auto with = basis;
  with.push_back(v);
  return rank(RatMatrix::fromRows(with)) == rank(RatMatrix::fromRows(basis));
}

// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<SparseVec<std::size_t>> sparseNullspace(const std::vector<SparseVec<std::size_t>>& columns) {
  const std::size_t ncols = columns.size();
  UnionFind uf(ncols);
  std::map<std::size_t, std::size_t> first_col_of_row;
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& [r, v] : columns[c]) {
      auto [it, fresh] = first_col_of_row.emplace(r, c);
      if (!fresh) uf.unite(it->second, c);
    }

  std::map<std::size_t, std::vector<std::size_t>> groups;  // root -> columns, ordered
  for (std::size_t c = 0; c < ncols; ++c) groups[uf.find(c)].push_back(c);

  std::vector<SparseVec<std::size_t>> out;
  for (const auto& [root, cols] : groups) {
    std::map<std::size_t, std::size_t> row_index;
    for (auto c : cols)
      for (const auto& [r, v] : columns[c]) row_index.emplace(r, 0);
    std::size_t i = 0;
    for (auto& [r, idx] : row_index) idx = i++;
    RatMatrix block(row_index.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [r, v] : columns[cols[j]]) block.at(row_index[r], j) = v;
    if (row_index.empty()) {
      for (auto c : cols) out.push_back(SparseVec<std::size_t>{{c, Rational(1)}});
      continue;
    }
    for (const auto& z : nullspace(block)) {
      SparseVec<std::size_t> v;
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (!z[j].isZero()) v.emplace(cols[j], z[j]);
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace superharm
