#pragma once

// Invariant subspaces under osp(m|2n), irreducibility and the reducible
// window, dimensions of L_(k,0,...,0), branching and the osp(4n+1|2m) check.

#include "harmonic.hpp"

#include <cstdint>

namespace superharm {

using SparseMatrix = std::vector<SparseVec<std::size_t>>;  // columns

SparseVec<std::size_t> applyMatrix(const SparseMatrix& A, const SparseVec<std::size_t>& v);

/// A finite-dimensional module given by generator matrices in a fixed basis.
struct ModuleRealization {
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::vector<SparseMatrix> matrices;
};

ModuleRealization realize(const GradedSpace& space, const std::vector<IndexedOp>& gens);

struct SubmoduleReport {
  std::vector<SparseVec<std::size_t>> basis;  // echelon basis of the closure
  std::size_t dim = 0;
  bool is_proper = false;
  bool is_whole = false;
};

/// Smallest generator-invariant subspace containing the seeds (rank saturation).
SubmoduleReport invariantClosure(const std::vector<SparseVec<std::size_t>>& seeds, const ModuleRealization& mod);

/// The Fischer-type window: M in -2N and 2 - M/2 <= k <= 2 - M.
bool inWindow(int m, int n, int k);
/// Predicate for irreducibility of H_k: M not in -2N, or k > 2 - M, or k < 2 - M/2.
bool irreduciblePredicate(int m, int n, int k);

/// Deterministic rational test vectors of length dim.
std::vector<SparseVec<std::size_t>> sampleVectors(std::size_t dim, std::size_t count, std::uint64_t seed);

/// Directed graph on the components of H_k: C -> C' when some generator
/// moves a vector of C into a vector with nonzero C' part.
struct ComponentGraph {
  HkDecomposition decomp;
  std::vector<std::vector<bool>> edge;
  /// Components reachable from the given set (the set included).
  std::vector<bool> reach(const std::vector<std::size_t>& start) const;
  std::size_t dimOf(const std::vector<bool>& set) const;
};
ComponentGraph componentGraph(const Frame& f, int k);

struct IrreducibilityReport {
  int m = 0, n = 0, k = 0;
  std::size_t dim = 0;
  bool predicate = true;      // irreduciblePredicate
  bool irreducible = true;    // closure verdict
  std::size_t seeds = 0;      // basis vectors plus sampled vectors
  std::size_t whole = 0;      // seeds whose closure is everything
  std::size_t min_closure = 0;
  std::string witness;        // a seed with a proper closure, if any
  bool saturation_checked = false;
  bool saturation_agrees = true;
  bool window = false;
  std::size_t window_dim = 0;       // dim H_{2-M-k} in the window
  bool window_is_closure = false;   // the proper closure equals R^{2k+M-2} H_{2-M-k}
  bool matches() const;
};

/// Closure verdict on H_k. Seeds: every nullspace basis vector plus
/// `samples` pseudo-random combinations. Saturation closures are run as a
/// cross-check when dim H_k <= saturation_limit.
IrreducibilityReport checkIrreducible(const Frame& f, int k, std::uint64_t seed, std::size_t samples = 20,
                                      std::size_t saturation_limit = 30);

struct WindowReport {
  GradedSpace space;  // R^{2k+M-2} H_{2-M-k}
  std::size_t dim = 0;
  bool harmonic = false;
  bool invariant = false;
  std::size_t intersection_dim = 0;  // dim(R^2 P_{k-2} cap H_k)
  bool equals_intersection = false;
};
WindowReport windowSubmodule(const Frame& f, int k);

struct MaximalityReport {
  std::size_t dim = 0, window_dim = 0;
  std::size_t outside_checked = 0, outside_whole = 0;  // basis vectors outside the window
  std::size_t samples_checked = 0, samples_containing = 0;  // nonzero closures containing the window
  bool maximal = false;
  bool indecomposable = false;
  std::string witness;
};
MaximalityReport maximalityAndIndecomposability(const Frame& f, int k, std::uint64_t seed, std::size_t samples = 20);

/// dim L_(k,0,...,0): four-sum formula in the window, dim H_k otherwise.
BigInt dimLk(int m, int n, int k);
/// dim H_k - dim(H_k cap R^2 P_{k-2}) from exact spaces.
std::size_t dimLkQuotient(const Frame& f, int k);

enum class BranchKind { Full, Truncated, NotCompletelyReducible };
struct BranchReport {
  BranchKind kind = BranchKind::Full;
  int lmin = 0, lmax = 0;
  BigInt sum = 0, target = 0;
  bool holds = true;
};
BranchReport branchLevels(int m, int n, int k);
std::string branchKindName(BranchKind k);

/// P_k / R^2 P_{k-2} realized on the monomials that are not echelon pivots of R^2 P_{k-2}.
struct QuotientModule {
  ModuleRealization module;
  std::vector<Monomial> basis;
  bool well_defined = false;       // generators send R^2 P_{k-2} to zero
  std::size_t harmonic_image_dim = 0;  // rank of H_k in the quotient
  bool harmonic_image_invariant = false;
};
QuotientModule quotientModule(const Frame& f, int k);

/// Literal: the operators exactly as listed. KleinTwisted: fermionic X_i and
/// d_{X_i} are multiplied by K = (-1)^{bosonic degree}, so that they
/// anticommute with the bosonic degree-one operators.
enum class OscillatorForm { Literal, KleinTwisted };

struct BigAlgebraReport {
  OscillatorForm form = OscillatorForm::KleinTwisted;
  std::size_t generators = 0;
  std::size_t rank = 0;
  std::size_t expected = 0;  // dim osp(4n+1|2m)
  std::size_t brackets = 0, brackets_closed = 0;
  std::size_t centralizer_checks = 0, centralizer_ok = 0;
  std::string witness;
  bool ok() const;
};
BigAlgebraReport bigAlgebraClosure(int m, int n, int d, OscillatorForm form = OscillatorForm::KleinTwisted);

}  // namespace superharm
