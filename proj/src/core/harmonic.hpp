#pragma once

// Polynomial and harmonic spaces, the Fischer decomposition and the
// splitting of H_k into o(m) + sp(2n) components.

#include "operators.hpp"

namespace superharm {

BigInt dimPk(int m, int n, int k);
/// Two-sum binomial formula; requires m != 0.
BigInt dimHkFormula(int m, int n, int k);

GradedSpace monomialBasisPk(const Frame& f, int k);
/// Kernel of op restricted to the span of the given monomials.
GradedSpace kernelOn(const LinearOp& op, SpecPtr spec, int degree, const std::vector<Monomial>& domain);

GradedSpace harmonics(const Frame& f, int k);
GradedSpace bosonicHarmonics(const Frame& f, int p);
GradedSpace fermionicHarmonics(const Frame& f, int q);

struct FischerPiece {
  int j = 0;            // power of R^2
  int harmonic_degree;  // degree of the harmonic factor
  GradedSpace space;
};
/// P_k = sum_j R^{2j} H_{k-2j} (or the theta^{2j} H^f form when m = 0).
std::vector<FischerPiece> fischer(const Frame& f, int k);

/// f_{k,p,q}(r^2, theta^2) with the printed normalization.
Polynomial fkpq(const Frame& f, int k, int p, int q);

struct HkComponent {
  int l = 0, p = 0, q = 0;
  GradedSpace space;
};

/// Components f_{l,p,q} H^b_p (x) H^f_q of H_k, ordered by q then l; empty ones are skipped.
std::vector<HkComponent> decomposeHk(const Frame& f, int k);

/// H_k with the concatenated component bases and the owner of every basis vector.
struct HkDecomposition {
  std::vector<HkComponent> components;
  GradedSpace joint;
  std::vector<std::size_t> owner;
  std::vector<std::size_t> offset;

  /// Component parts of v (v must lie in H_k).
  std::vector<Polynomial> split(const Polynomial& v) const;
  /// Indices of components where v has a nonzero part.
  std::vector<std::size_t> support(const Polynomial& v) const;
};
HkDecomposition decomposition(const Frame& f, int k);

class EigenvalueCollision : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Product formula for the projection onto the (r, s) component of H_k.
LinearOp projector(const Frame& f, int k, int r, int s);

}  // namespace superharm
