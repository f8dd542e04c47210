#include "pstlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "pstlab/errors.hpp"

namespace pstlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTieTol = 1e-12;
constexpr double kClusterTol = 1e-8;

void check_vertex(int v, int n) {
  if (v < 1 || v > n)
    throw invalid_input("vertex index " + std::to_string(v) + " out of range [1, " +
                        std::to_string(n) + "]");
}

}  // namespace

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  ComplexMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < n_; ++j) out(i, j) += aik * o(k, j);
    }
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = std::conj((*this)(j, i));
  return out;
}

double ComplexMatrix::unitarity_defect() const {
  const ComplexMatrix prod = *this * adjoint();
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const Complex expect = (i == j) ? Complex{1.0, 0.0} : Complex{};
      worst = std::max(worst, std::abs(prod(i, j) - expect));
    }
  return worst;
}

ComplexMatrix propagator(const EigenDecomposition& dec, double t) {
  const int n = dec.n;
  ComplexMatrix u(n);
  std::vector<Complex> phase(n);
  for (int k = 0; k < n; ++k) phase[k] = std::polar(1.0, -dec.values[k] * t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex sum{};
      for (int k = 0; k < n; ++k) sum += dec.vec(i, k) * phase[k] * dec.vec(j, k);
      u(i, j) = sum;
    }
  return u;
}

ComplexMatrix propagator(const Graph& g, double t) { return propagator(eigendecompose(g), t); }

double fidelity(const EigenDecomposition& dec, int i, int j, double t) {
  check_vertex(i, dec.n);
  check_vertex(j, dec.n);
  Complex sum{};
  for (int k = 0; k < dec.n; ++k) {
    // real weight first, so swapping i and j yields bit-identical floats
    const double w = dec.vec(i - 1, k) * dec.vec(j - 1, k);
    sum += w * std::polar(1.0, -dec.values[k] * t);
  }
  return std::abs(sum);
}

double fidelity(const Graph& g, int i, int j, double t) {
  return fidelity(eigendecompose(g), i, j, t);
}

Complex TrigPolynomial::eval(double t) const {
  Complex sum{};
  for (const auto& term : terms)
    sum += term.coeff.get_d() * std::polar(1.0, -static_cast<double>(term.lambda) * t);
  return sum;
}

Rat TrigPolynomial::coefficient_sum() const {
  Rat sum = 0;
  for (const auto& term : terms) sum += term.coeff;
  return sum;
}

TrigPolynomial entry_polynomial(const std::vector<RationalProjector>& projectors, int i, int j) {
  if (projectors.empty()) throw invalid_input("entry_polynomial needs at least one projector");
  const int n = projectors.front().n;
  check_vertex(i, n);
  check_vertex(j, n);
  TrigPolynomial poly;
  for (const auto& proj : projectors) {
    const Rat& c = proj.at(i - 1, j - 1);
    if (c != 0) poly.terms.push_back({proj.lambda, c});
  }
  return poly;
}

namespace {

/// Amplitudes of e^{-i lambda t} per distinct eigenvalue cluster for the
/// (i,j) entry: c_r = sum over the cluster of V[i,k] V[j,k].
struct EntrySignal {
  std::vector<double> lambda;
  std::vector<double> amp;

  double eval(double t) const {
    Complex sum{};
    for (std::size_t r = 0; r < lambda.size(); ++r)
      sum += amp[r] * std::polar(1.0, -lambda[r] * t);
    return std::abs(sum);
  }

  // d/dt |F|^2 = 2 Re(conj(F) F'); full precision near flat peaks where
  // |F| itself is constant to machine epsilon.
  double deriv(double t) const {
    Complex f{}, fp{};
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      const Complex e = std::polar(1.0, -lambda[r] * t);
      f += amp[r] * e;
      fp += amp[r] * Complex{0.0, -lambda[r]} * e;
    }
    return 2.0 * (f.real() * fp.real() + f.imag() * fp.imag());
  }
};

EntrySignal make_signal(const EigenDecomposition& dec, int i0, int j0) {
  EntrySignal sig;
  int k = 0;
  while (k < dec.n) {
    int end = k + 1;
    while (end < dec.n && std::abs(dec.values[end] - dec.values[k]) < kClusterTol) ++end;
    double amp = 0.0, lam = 0.0;
    for (int m = k; m < end; ++m) {
      amp += dec.vec(i0, m) * dec.vec(j0, m);
      lam += dec.values[m];
    }
    sig.lambda.push_back(lam / (end - k));
    sig.amp.push_back(amp);
    k = end;
  }
  return sig;
}

/// Golden-section maximization of f on [a, b] down to width tol.
std::pair<double, double> golden_max(const EntrySignal& sig, double a, double b, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = sig.eval(c);
  double fd = sig.eval(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = sig.eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = sig.eval(d);
    }
  }
  const double t = 0.5 * (a + b);
  return {t, sig.eval(t)};
}

/// Golden-section bracket refinement plus a derivative-bisection polish.
/// |F| is flat to machine epsilon within ~sqrt(eps) of a smooth maximum, so
/// value comparisons alone cannot do better than ~1e-8 in t; the sign of
/// d|F|^2/dt still resolves the peak to full precision.
std::pair<double, double> refine_max(const EntrySignal& sig, double lo, double hi, double tol) {
  auto [t, f] = golden_max(sig, lo, hi, tol);
  double dlo = sig.deriv(lo);
  double dhi = sig.deriv(hi);
  if (dlo >= 0.0 && dhi <= 0.0) {
    double a = lo, b = hi;
    for (int iter = 0; iter < 200 && b - a > 1e-16 * (1.0 + std::abs(b)); ++iter) {
      const double mid = 0.5 * (a + b);
      if (sig.deriv(mid) >= 0.0)
        a = mid;
      else
        b = mid;
    }
    const double t_polished = 0.5 * (a + b);
    const double f_polished = sig.eval(t_polished);
    if (f_polished >= f) return {t_polished, f_polished};
  }
  return {t, f};
}

}  // namespace

FidelityMax max_fidelity(const EigenDecomposition& dec, int i, int j, double t_max, int grid,
                         double refine_tol) {
  check_vertex(i, dec.n);
  check_vertex(j, dec.n);
  if (!(t_max > 0.0)) throw invalid_input("max_fidelity needs t_max > 0");
  if (grid < 2) throw invalid_input("max_fidelity needs grid >= 2");

  const EntrySignal sig = make_signal(dec, i - 1, j - 1);
  const double step = t_max / (grid - 1);

  std::vector<double> samples(grid);
  {
    // incremental phase rotation, re-anchored periodically against drift
    std::vector<Complex> z(sig.lambda.size()), w(sig.lambda.size());
    for (std::size_t r = 0; r < sig.lambda.size(); ++r) w[r] = std::polar(1.0, -sig.lambda[r] * step);
    for (int k = 0; k < grid; ++k) {
      if (k % 512 == 0) {
        const double t = k * step;
        for (std::size_t r = 0; r < sig.lambda.size(); ++r)
          z[r] = std::polar(1.0, -sig.lambda[r] * t);
      }
      Complex sum{};
      for (std::size_t r = 0; r < sig.lambda.size(); ++r) sum += sig.amp[r] * z[r];
      samples[k] = std::abs(sum);
      for (std::size_t r = 0; r < sig.lambda.size(); ++r) z[r] *= w[r];
    }
  }

  // local maxima on the grid (boundaries count one-sided)
  std::vector<int> maxima;
  for (int k = 0; k < grid; ++k) {
    const bool left_ok = (k == 0) || samples[k] >= samples[k - 1];
    const bool right_ok = (k == grid - 1) || samples[k] >= samples[k + 1];
    if (left_ok && right_ok) maxima.push_back(k);
  }
  std::stable_sort(maxima.begin(), maxima.end(),
                   [&](int x, int y) { return samples[x] > samples[y]; });
  if (maxima.size() > 5) maxima.resize(5);

  FidelityMax best;
  best.i = i;
  best.j = j;
  best.grid_size = grid;
  best.refine_tol = refine_tol;
  best.f_star = -1.0;
  for (int k : maxima) {
    const double lo = (k == 0) ? 0.0 : (k - 1) * step;
    const double hi = (k == grid - 1) ? t_max : (k + 1) * step;
    const auto [t, f] = refine_max(sig, lo, hi, refine_tol);
    if (f > best.f_star + kTieTol || (std::abs(f - best.f_star) <= kTieTol && t < best.t_star)) {
      best.t_star = t;
      best.f_star = f;
    }
  }
  return best;
}

FidelityMax max_fidelity(const Graph& g, int i, int j, double t_max, int grid, double refine_tol) {
  return max_fidelity(eigendecompose(g), i, j, t_max, grid, refine_tol);
}

double period(const Graph& g, const IntegralCertificate& cert) {
  if (!g.connected()) throw invalid_input("period needs a connected graph");
  if (!g.regular_degree()) throw invalid_input("period needs a regular graph");
  long gcd_all = 0;
  for (const auto& [la, ma] : cert.roots)
    for (const auto& [lb, mb] : cert.roots)
      if (la > lb) gcd_all = std::gcd(gcd_all, la - lb);
  if (gcd_all == 0) throw invalid_input("period needs at least two distinct eigenvalues");

  const double t = 2.0 * kPi / static_cast<double>(gcd_all);
  const EigenDecomposition dec = eigendecompose(g);
  for (int v = 1; v <= g.order(); ++v)
    if (fidelity(dec, v, v, t) < 1.0 - 1e-9)
      throw numerical_error("computed period fails revival at vertex " + std::to_string(v));
  return t;
}

PstReport pst_report(const Graph& g, std::optional<double> t_max, double pst_tol, int grid) {
  if (!g.connected()) throw invalid_input("pst_report needs a connected graph");
  const int n = g.order();

  PstReport report;
  report.graph = g.name();
  report.regular_degree = g.regular_degree();
  const IntegralityResult integrality = integral_certificate(g);
  report.integral = integrality.is_integral();
  report.periodic = report.regular_degree.has_value() && report.integral;
  // a single vertex is trivially periodic but has no spectral gap to set a period
  if (report.periodic && n > 1) report.period = period(g, *integrality.certificate);
  report.pst_tol = pst_tol;
  report.t_max = t_max.value_or(report.period.value_or(6.0 * kPi));

  const EigenDecomposition dec = eigendecompose(g);
  report.best.f_star = -1.0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      FidelityMax fm = max_fidelity(dec, i, j, report.t_max, grid);
      report.pairs.push_back(fm);
      if (fm.f_star > report.best.f_star + kTieTol) report.best = fm;
    }
  if (report.pairs.empty()) report.best = FidelityMax{};  // single vertex: nothing to transfer
  report.pst = !report.pairs.empty() && report.best.f_star >= 1.0 - pst_tol;
  return report;
}

bool strongly_cospectral(const std::vector<RationalProjector>& projectors, int i, int j) {
  if (projectors.empty()) throw invalid_input("strongly_cospectral needs projectors");
  const int n = projectors.front().n;
  check_vertex(i, n);
  check_vertex(j, n);
  for (const auto& proj : projectors) {
    bool plus = true, minus = true;
    for (int r = 0; r < n; ++r) {
      const Rat& a = proj.at(r, i - 1);
      const Rat& b = proj.at(r, j - 1);
      if (a != b) plus = false;
      if (a != -b) minus = false;
      if (!plus && !minus) return false;
    }
  }
  return true;
}

std::string entry_csv(const Graph& g, int i, int j, int samples, double t_max) {
  check_vertex(i, g.order());
  check_vertex(j, g.order());
  if (samples < 1) throw invalid_input("entry_csv needs samples >= 1");
  if (!(t_max > 0.0)) throw invalid_input("entry_csv needs t_max > 0");

  const EigenDecomposition dec = eigendecompose(g);
  std::ostringstream out;
  out << "t,re,im,abs\n";
  char buf[512];
  for (int k = 0; k < samples; ++k) {
    const double t = (samples == 1) ? 0.0 : t_max * k / (samples - 1);
    Complex entry{};
    for (int m = 0; m < dec.n; ++m) {
      const double w = dec.vec(i - 1, m) * dec.vec(j - 1, m);
      entry += w * std::polar(1.0, -dec.values[m] * t);
    }
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", t, entry.real(), entry.imag(),
                  std::abs(entry));
    out << buf;
  }
  return out.str();
}

}  // namespace pstlab
