#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pstlab/exact.hpp"
#include "pstlab/graph.hpp"

namespace pstlab {

/// Numerical symmetric eigendecomposition, eigenpairs sorted by descending
/// eigenvalue. `vectors` is row-major n*n; column k holds the k-th
/// orthonormal eigenvector.
struct EigenDecomposition {
  int n = 0;
  std::vector<double> values;
  std::vector<double> vectors;

  double vec(int row, int col) const { return vectors[static_cast<std::size_t>(row) * n + col]; }
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-13 (at most 100 sweeps; failure to converge throws numerical_error,
/// which must not happen for the 0/1 matrices of interest, n <= 30).
EigenDecomposition eigendecompose(const Graph& g);

/// Integer coefficients of det(xI - A), ascending degree (coeffs[k] is the
/// x^k coefficient, coeffs[n] == 1). Faddeev-LeVerrier recursion over
/// arbitrary-precision integers, exact throughout.
IntPoly char_poly(const Graph& g);

/// Exact integer spectrum: roots (lambda, multiplicity) sorted by descending
/// lambda, plus the full characteristic polynomial.
struct IntegralCertificate {
  std::vector<std::pair<long, int>> roots;
  IntPoly charpoly;

  int multiplicity_of(long lambda) const;
};

/// Outcome of the integrality decision. Exact: either the characteristic
/// polynomial splits over the integers (certificate engaged) or the
/// non-splitting residual factor is reported.
struct IntegralityResult {
  std::optional<IntegralCertificate> certificate;
  IntPoly residual;  // == {1} (trivial) when integral

  bool is_integral() const { return certificate.has_value(); }
};

/// Trial division by (x - lambda) for every integer |lambda| <= max degree.
IntegralityResult integral_certificate(const Graph& g);

/// Exact rational orthogonal projector onto the lambda-eigenspace.
struct RationalProjector {
  long lambda = 0;
  int n = 0;
  RatMat entries;

  const Rat& at(int row, int col) const { return entries(row, col); }
};

/// One projector per certified eigenvalue, via the Lagrange interpolation
/// product E_r = prod_{s != r} (A - lambda_s I) / (lambda_r - lambda_s) in
/// exact rational arithmetic. Verifies idempotence, symmetry, the eigenvalue
/// equation, the trace and the resolution of the identity before returning.
std::vector<RationalProjector> rational_projectors(const Graph& g,
                                                   const IntegralCertificate& cert);

/// Render "lambda multiplicity" lines plus the characteristic polynomial,
/// the certificate block used by the CLI spectrum/integral commands.
std::string format_certificate(const IntegralityResult& result);

/// Human-readable polynomial like "x^2 - 12" from ascending coefficients.
std::string format_poly(const IntPoly& p);

}  // namespace pstlab
