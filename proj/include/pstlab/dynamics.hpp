#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pstlab/graph.hpp"
#include "pstlab/spectral.hpp"

namespace pstlab {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major, 0-based.
class ComplexMatrix {
 public:
  ComplexMatrix() : n_(0) {}
  explicit ComplexMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  Complex& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const Complex& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix adjoint() const;

  /// Largest |entry| of (this * this^dagger - I); 0 for a perfect unitary.
  double unitarity_defect() const;

 private:
  int n_;
  std::vector<Complex> a_;
};

/// U(t) = V diag(e^{-i lambda t}) V^T from the numerical eigendecomposition.
ComplexMatrix propagator(const EigenDecomposition& dec, double t);
ComplexMatrix propagator(const Graph& g, double t);

/// |U(t)[j,i]| for 1-based vertices.
double fidelity(const EigenDecomposition& dec, int i, int j, double t);
double fidelity(const Graph& g, int i, int j, double t);

/// A propagator entry as a finite sum  sum_r c_r e^{-i lambda_r t}  with
/// exact rational coefficients c_r (the projector entries).
struct TrigTerm {
  long lambda;
  Rat coeff;
};

struct TrigPolynomial {
  std::vector<TrigTerm> terms;  // distinct lambdas, descending

  Complex eval(double t) const;
  Rat coefficient_sum() const;  // value at t = 0 (1 on the diagonal, 0 off it)
};

/// Entry (i,j) of the propagator in closed form; zero coefficients dropped.
TrigPolynomial entry_polynomial(const std::vector<RationalProjector>& projectors, int i, int j);

/// Result of a global fidelity maximization for one vertex pair.
struct FidelityMax {
  int i = 0, j = 0;
  double t_star = 0.0;
  double f_star = 0.0;
  int grid_size = 0;
  double refine_tol = 0.0;
};

/// Dense scan of [0, t_max] at `grid` samples; the strongest local maxima are
/// bracketed and refined by golden-section search to `refine_tol` in t.
/// Candidates within 1e-12 of the incumbent count as ties and resolve toward
/// smaller t (the all-pairs search then prefers smaller (i,j)).
FidelityMax max_fidelity(const EigenDecomposition& dec, int i, int j, double t_max,
                         int grid = 20000, double refine_tol = 1e-12);
FidelityMax max_fidelity(const Graph& g, int i, int j, double t_max, int grid = 20000,
                         double refine_tol = 1e-12);

/// 2*pi / gcd of all pairwise eigenvalue differences; requires a connected,
/// regular, integral graph, and numerically verifies full revival at the
/// returned time before returning it.
double period(const Graph& g, const IntegralCertificate& cert);

/// Whole-graph PST analysis over all vertex pairs i < j.
struct PstReport {
  std::string graph;
  std::optional<int> regular_degree;
  bool integral = false;
  bool periodic = false;  // regular AND integral (connected is a precondition)
  std::optional<double> period;
  double t_max = 0.0;
  double pst_tol = 0.0;
  FidelityMax best;
  std::vector<FidelityMax> pairs;  // all i < j in lexicographic order
  bool pst = false;                // best.f_star >= 1 - pst_tol
};

/// t_max defaults to one period for periodic graphs and 6*pi otherwise.
PstReport pst_report(const Graph& g, std::optional<double> t_max = std::nullopt,
                     double pst_tol = 1e-6, int grid = 20000);

/// True iff column i of every projector equals +/- column j exactly
/// (per-eigenvalue sign). A necessary condition for PST between i and j.
bool strongly_cospectral(const std::vector<RationalProjector>& projectors, int i, int j);

/// CSV rows "t,re,im,abs" for entry (i,j) sampled uniformly on [0, t_max],
/// 17 significant digits.
std::string entry_csv(const Graph& g, int i, int j, int samples, double t_max);

}  // namespace pstlab
