#pragma once

// Linear operators on superpolynomials and their matrix realizations.

#include "space.hpp"

#include <functional>

namespace superharm {

/// The orthosymplectic metric: identity on the bosons, J = 1/2 [[0,-1],[1,0]]
/// on each fermion pair.
struct Metric {
  int m = 0, n = 0;
  RatMatrix g;
  RatMatrix g_inv;

  static Metric of(int m, int n);
  static Metric of(const Frame& f) { return of(f.m(), f.n()); }
};

class LinearOp {
 public:
  /// Adds coeff * op(mono) into out.
  using Kernel = std::function<void(const Monomial& mono, const Rational& coeff, Terms& out)>;

  LinearOp() = default;
  LinearOp(SpecPtr spec, std::string name, int shift, int parity, Kernel kernel)
      : spec_(std::move(spec)), name_(std::move(name)), shift_(shift), parity_(parity), kernel_(std::move(kernel)) {}

  static LinearOp identity(SpecPtr spec);
  static LinearOp multiplication(const Polynomial& p, std::string name);

  const SpecPtr& spec() const { return spec_; }
  const std::string& name() const { return name_; }
  int shift() const { return shift_; }
  int parity() const { return parity_; }
  LinearOp renamed(std::string name) const;

  Polynomial operator()(const Polynomial& f) const;
  void applyTo(const Monomial& mono, const Rational& coeff, Terms& out) const { kernel_(mono, coeff, out); }

  /// a o b
  friend LinearOp compose(const LinearOp& a, const LinearOp& b);
  friend LinearOp operator+(const LinearOp& a, const LinearOp& b);
  friend LinearOp operator-(const LinearOp& a, const LinearOp& b);
  friend LinearOp operator*(const Rational& c, const LinearOp& a);
  /// a b - (-1)^{|a||b|} b a, with the parities stored on the operators.
  friend LinearOp supercommutator(const LinearOp& a, const LinearOp& b);

 private:
  SpecPtr spec_;
  std::string name_;
  int shift_ = 0;
  int parity_ = 0;
  Kernel kernel_;
};

/// sum_{a,b} C_ab X_a d_{X_b} over the frame's variables (local indices from 0).
LinearOp vectorField(const Frame& f, const RatMatrix& C, std::string name);

LinearOp laplacian(const Frame& f);
LinearOp laplacianBosonic(const Frame& f);
LinearOp laplacianFermionic(const Frame& f);
Polynomial rSquaredPoly(const Frame& f);
Polynomial rSquaredBosonicPoly(const Frame& f);
Polynomial thetaSquaredPoly(const Frame& f);
LinearOp rSquared(const Frame& f);
LinearOp euler(const Frame& f);
LinearOp eulerBosonic(const Frame& f);
LinearOp eulerFermionic(const Frame& f);

enum class LBPart { Full, Bosonic, Fermionic };
LinearOp laplaceBeltrami(const Frame& f, LBPart part = LBPart::Full);

/// L_ij = X_i d_{X^j} - (-1)^{[i][j]} X_j d_{X^i} with d_{X^j} = sum_k (g^-1)_{jk} d_{X_k};
/// 1-based indices, any order.
LinearOp ospGenerator(const Frame& f, const Metric& g, int i, int j);

struct IndexedOp {
  int i = 0, j = 0;
  LinearOp op;
};
/// All L_ij with i <= j, skipping the vanishing bosonic diagonal.
std::vector<IndexedOp> ospGenerators(const Frame& f);

/// E_ij = X_i d_{X_j}
LinearOp glGenerator(const Frame& f, int i, int j);

/// Which matrix supplies the raised indices in -1/2 sum L_ij g^{il} g^{jk} L_kl.
enum class RaisedIndex { MetricEntries, InverseEntries };
LinearOp casimirForm(const Frame& f, RaisedIndex reading = RaisedIndex::MetricEntries);

/// sum_{ij} X_i g_ij Y_j between two blocks of the same shape.
Polynomial innerProduct(const Frame& x, const Frame& y);

/// Columns are the coordinates of op(basis_j) in the target.
RatMatrix matrixOf(const LinearOp& op, const GradedSpace& domain, const GradedSpace& target);
std::vector<SparseVec<std::size_t>> sparseMatrixOf(const LinearOp& op, const GradedSpace& domain,
                                                   const GradedSpace& target);

/// First basis index where two operators differ, or nullopt when they agree on the space.
std::optional<std::size_t> firstDifference(const LinearOp& a, const LinearOp& b, const GradedSpace& domain);

}  // namespace superharm
