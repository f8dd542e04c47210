#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "pstlab/dynamics.hpp"
#include "pstlab/exact.hpp"
#include "pstlab/graph.hpp"

namespace pstlab {

/// Longest time window on a sampled [0, 2*pi] where one propagator entry's
/// modulus stays inside a band of half-width epsilon around some level k.
struct PersistencyResult {
  int i = 0, j = 0;
  double epsilon = 0.0;
  double level = 0.0;  // (window max + window min) / 2
  double t0 = 0.0, t1 = 0.0;
  double length = 0.0;
  int grid = 0;
};

/// Two-pointer sweep over `grid` samples of [0, 2*pi]: the reported closed
/// window [t0, t1] is the longest whose sampled oscillation (max - min)
/// stays below 2*epsilon, maximal at grid resolution.
PersistencyResult persistency(const Graph& g, int i, int j, double epsilon, int grid = 20001);

/// Max and mean of the pairwise window lengths over all ordered pairs i < j.
struct PersistencySummary {
  double max_length = 0.0;
  double mean_length = 0.0;
};
PersistencySummary persistency_summary(const Graph& g, double epsilon, int grid = 20001);

/// Engaged with the common modulus c iff all |M[i][j]| agree within tol and
/// (M/c)(M/c)^dagger = n I within tol.
std::optional<double> is_scaled_complex_hadamard(const ComplexMatrix& m, double tol = 1e-10);

/// The K4-supported 0/±1 sign matrix scaled by 1/sqrt(3); rows are
/// orthogonal with norm sqrt(3), so the scaling makes it unitary. Zero
/// diagonal, support exactly E(K4).
ComplexMatrix w_k4();

/// The integer seed of w_k4 (entries in {0, ±1}); w_k4 = seed / sqrt(3).
IntMat w_k4_seed();

/// Boolean support mask of a matrix (true = |entry| > zero_tol).
struct ZeroPattern {
  int n = 0;
  std::vector<std::uint8_t> nonzero;  // row-major

  bool operator==(const ZeroPattern& o) const = default;
};

ZeroPattern zero_pattern(const ComplexMatrix& m, double zero_tol = 1e-9);

struct ProbabilityTransferResult {
  /// (step t, from i, to j) of the first off-diagonal unit-modulus entry.
  std::optional<std::tuple<int, int, int>> transfer;
  std::vector<ZeroPattern> patterns;  // distinct, in order of first appearance
};

/// Iterate W^t for t = 1..max_steps, collecting distinct zero patterns and
/// watching for perfect probability transfer |W^t[j,i]| >= 1 - 1e-9, i != j.
/// Rejects input that is not unitary within 1e-10.
ProbabilityTransferResult probability_transfer_search(const ComplexMatrix& w, int max_steps,
                                                      double zero_tol = 1e-9);

/// Same search in exact arithmetic for matrices of the form seed/sqrt(s):
/// powers are tracked as integer matrices with the scale s^{t/2} kept aside,
/// so zero patterns are exact and transfer means N[j][i]^2 == s^t.
ProbabilityTransferResult probability_transfer_search_exact(const IntMat& seed, const Int& s,
                                                            int max_steps);

}  // namespace pstlab
