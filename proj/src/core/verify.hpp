#pragma once

// Exact invariant suites over a grid of (m, n).

#include "repr.hpp"
#include "sphereint.hpp"

#include <cstdint>

namespace superharm {

struct GridPoint {
  int m = 0, n = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};
using Grid = std::vector<GridPoint>;

Grid defaultGrid();
/// "default" or an inline list such as "2:1,3:2".
Grid parseGrid(const std::string& text);

struct CheckResult {
  std::string group;
  std::string name;
  int m = -1, n = -1, k = -1;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string witness;  // first failing input
  std::string note;
  bool pass() const { return failures == 0; }
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
  std::size_t failures() const;
  void append(const SuiteResult& other);
};

struct VerifyOptions {
  Grid grid = defaultGrid();
  int kmax = -1;  // suite default when negative
  std::uint64_t seed = 20240601;
};

SuiteResult verifySl2(const VerifyOptions& o);
SuiteResult verifyInvariance(const VerifyOptions& o);
SuiteResult verifyCasimir(const VerifyOptions& o);
SuiteResult verifyDims(const VerifyOptions& o);
SuiteResult verifyFischer(const VerifyOptions& o);
SuiteResult verifyDecomp(const VerifyOptions& o);
SuiteResult verifyProjectors(const VerifyOptions& o);
SuiteResult verifyTripleRoute(const VerifyOptions& o);
SuiteResult verifyPizzettiProperties(const VerifyOptions& o);
SuiteResult verifyDarboux(const VerifyOptions& o);
SuiteResult verifyIrreducibility(const VerifyOptions& o);
SuiteResult verifyWindow(const VerifyOptions& o);
SuiteResult verifyLkDimensions(const VerifyOptions& o);
SuiteResult verifyBranching(const VerifyOptions& o);
SuiteResult verifyBigAlgebra(const VerifyOptions& o);

const std::vector<std::string>& suiteNames();
/// Runs a named suite; throws DomainError for unknown names.
SuiteResult runSuite(const std::string& name, const VerifyOptions& o);

/// Rational O(m) x Sp(2n) element (Cayley transforms), satisfying S^T g S = g.
RatMatrix sampleGroupElement(int m, int n, std::uint64_t seed);

}  // namespace superharm
