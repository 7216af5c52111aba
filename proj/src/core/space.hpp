#pragma once

// Graded spaces: an explicit polynomial basis with exact coordinates.

#include "superalgebra.hpp"

#include <mutex>

namespace superharm {

/// One variable block of a spec viewed as R^{m|2n}; local indices run 1..m+2n,
/// bosonic first.
struct Frame {
  SpecPtr spec;
  int block = 0;

  static Frame superspace(int m, int n);
  int m() const { return spec->block(block).bosonic; }
  int n() const { return spec->block(block).fermionic / 2; }
  int size() const { return m() + 2 * n(); }
  int superdim() const { return m() - 2 * n(); }
  bool isFermionic(int i) const { return i > m(); }
  VarRef var(int i) const;
};

enum class VarClass { All, Bosonic, Fermionic };

/// Monomials of total degree k in the frame's variables (restricted to one
/// class if asked), in ascending canonical order.
std::vector<Monomial> enumerateMonomials(const Frame& f, int k, VarClass which = VarClass::All);

class GradedSpace {
 public:
  GradedSpace() = default;
  GradedSpace(SpecPtr spec, int degree, std::vector<Polynomial> basis);
  static GradedSpace fromMonomials(SpecPtr spec, int degree, const std::vector<Monomial>& monos);

  const SpecPtr& spec() const { return state_->spec; }
  int degree() const { return state_->degree; }
  std::size_t dim() const { return state_ ? state_->basis.size() : 0; }
  const std::vector<Polynomial>& basis() const { return state_->basis; }
  const Polynomial& at(std::size_t i) const { return state_->basis.at(i); }

  /// Expansion in the basis, or nullopt if v is outside the span.
  std::optional<SparseVec<std::size_t>> coordinates(const Polynomial& v) const;
  RatVector denseCoordinates(const Polynomial& v) const;
  bool contains(const Polynomial& v) const { return coordinates(v).has_value(); }
  Polynomial combine(const SparseVec<std::size_t>& coords) const;
  Polynomial combine(const RatVector& coords) const;

 private:
  struct State {
    SpecPtr spec;
    int degree = 0;
    std::vector<Polynomial> basis;
    bool monomial = false;
    std::map<Monomial, std::size_t> index;
    std::once_flag built;
    std::unique_ptr<SparseEchelon<Monomial>> echelon;
  };
  void ensureEchelon() const;

  std::shared_ptr<State> state_;
};

}  // namespace superharm
