#include "pstlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "pstlab/errors.hpp"

namespace pstlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> sample_entry_modulus(const Graph& g, int i, int j, int grid) {
  const EigenDecomposition dec = eigendecompose(g);
  std::vector<double> out(grid);
  for (int k = 0; k < grid; ++k) {
    const double t = 2.0 * kPi * k / (grid - 1);
    out[k] = fidelity(dec, i, j, t);
  }
  return out;
}

}  // namespace

PersistencyResult persistency(const Graph& g, int i, int j, double epsilon, int grid) {
  if (epsilon < 0.0) throw invalid_input("persistency needs epsilon >= 0");
  if (grid < 2) throw invalid_input("persistency needs grid >= 2");
  const std::vector<double> f = sample_entry_modulus(g, i, j, grid);
  const double step = 2.0 * kPi / (grid - 1);

  // Sliding window with monotonic deques: for each right end, shrink from
  // the left until max - min < 2*epsilon, track the longest window.
  // epsilon == 0 admits no window at all (the band is strict), so the sweep
  // may shrink past the current sample; guard the deques accordingly.
  std::deque<int> maxq, minq;
  int left = 0, best_l = 0, best_r = 0;
  for (int right = 0; right < grid; ++right) {
    while (!maxq.empty() && f[maxq.back()] <= f[right]) maxq.pop_back();
    maxq.push_back(right);
    while (!minq.empty() && f[minq.back()] >= f[right]) minq.pop_back();
    minq.push_back(right);
    while (!maxq.empty() && !minq.empty() &&
           f[maxq.front()] - f[minq.front()] >= 2.0 * epsilon) {
      if (maxq.front() == left) maxq.pop_front();
      if (minq.front() == left) minq.pop_front();
      ++left;
    }
    if (left <= right && right - left > best_r - best_l) {
      best_l = left;
      best_r = right;
    }
  }

  double lo = f[best_l], hi = f[best_l];
  for (int k = best_l; k <= best_r; ++k) {
    lo = std::min(lo, f[k]);
    hi = std::max(hi, f[k]);
  }

  PersistencyResult out;
  out.i = i;
  out.j = j;
  out.epsilon = epsilon;
  out.level = 0.5 * (lo + hi);
  out.t0 = best_l * step;
  out.t1 = best_r * step;
  out.length = out.t1 - out.t0;
  out.grid = grid;
  return out;
}

PersistencySummary persistency_summary(const Graph& g, double epsilon, int grid) {
  PersistencySummary summary;
  double total = 0.0;
  int count = 0;
  for (int i = 1; i <= g.order(); ++i)
    for (int j = i + 1; j <= g.order(); ++j) {
      const double len = persistency(g, i, j, epsilon, grid).length;
      summary.max_length = std::max(summary.max_length, len);
      total += len;
      ++count;
    }
  summary.mean_length = count ? total / count : 0.0;
  return summary;
}

std::optional<double> is_scaled_complex_hadamard(const ComplexMatrix& m, double tol) {
  const int n = m.size();
  if (n == 0) return std::nullopt;
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale += std::abs(m(i, j));
  scale /= n * n;
  if (scale <= 0.0) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(std::abs(m(i, j)) - scale) > tol) return std::nullopt;

  // (M/c)(M/c)^dagger must equal n*I within tol
  const ComplexMatrix gram = m * m.adjoint();
  const double inv_sq = 1.0 / (scale * scale);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double expect = (i == j) ? static_cast<double>(n) : 0.0;
      if (std::abs(gram(i, j) * inv_sq - expect) > tol) return std::nullopt;
    }
  return scale;
}

IntMat w_k4_seed() {
  IntMat seed(4);
  const int rows[4][4] = {{0, -1, 1, 1}, {1, 0, -1, 1}, {1, -1, 0, -1}, {1, 1, 1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) seed(i, j) = rows[i][j];
  return seed;
}

ComplexMatrix w_k4() {
  const IntMat seed = w_k4_seed();
  const double inv = 1.0 / std::sqrt(3.0);
  ComplexMatrix out(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = seed(i, j).get_d() * inv;
  return out;
}

ZeroPattern zero_pattern(const ComplexMatrix& m, double zero_tol) {
  ZeroPattern pat;
  pat.n = m.size();
  pat.nonzero.resize(static_cast<std::size_t>(pat.n) * pat.n);
  for (int i = 0; i < pat.n; ++i)
    for (int j = 0; j < pat.n; ++j)
      pat.nonzero[static_cast<std::size_t>(i) * pat.n + j] = std::abs(m(i, j)) > zero_tol ? 1 : 0;
  return pat;
}

ProbabilityTransferResult probability_transfer_search(const ComplexMatrix& w, int max_steps,
                                                      double zero_tol) {
  if (w.unitarity_defect() > 1e-10)
    throw invalid_input("probability_transfer_search needs a unitary matrix");
  const int n = w.size();
  ProbabilityTransferResult result;
  ComplexMatrix power = w;
  for (int t = 1; t <= max_steps; ++t) {
    if (t > 1) power = power * w;
    const ZeroPattern pat = zero_pattern(power, zero_tol);
    if (std::find(result.patterns.begin(), result.patterns.end(), pat) == result.patterns.end())
      result.patterns.push_back(pat);
    if (!result.transfer) {
      for (int i = 0; i < n && !result.transfer; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && std::abs(power(j, i)) >= 1.0 - 1e-9) {
            result.transfer = {t, i + 1, j + 1};
            break;
          }
    }
  }
  return result;
}

ProbabilityTransferResult probability_transfer_search_exact(const IntMat& seed, const Int& s,
                                                            int max_steps) {
  const int n = seed.size();
  {
    // seed/sqrt(s) must be unitary: seed * seed^T == s * I, exactly.
    IntMat gram(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int sum = 0;
        for (int k = 0; k < n; ++k) sum += seed(i, k) * seed(j, k);
        gram(i, j) = sum;
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (gram(i, j) != ((i == j) ? s : Int(0)))
          throw invalid_input("probability_transfer_search_exact needs seed*seed^T == s*I");
  }

  ProbabilityTransferResult result;
  IntMat power = seed;
  Int scale_sq = s;  // |W^t| entries are |power|/sqrt(s^t); scale_sq = s^t
  for (int t = 1; t <= max_steps; ++t) {
    if (t > 1) {
      power = power * seed;
      scale_sq *= s;
    }
    ZeroPattern pat;
    pat.n = n;
    pat.nonzero.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        pat.nonzero[static_cast<std::size_t>(i) * n + j] = power(i, j) != 0 ? 1 : 0;
    if (std::find(result.patterns.begin(), result.patterns.end(), pat) == result.patterns.end())
      result.patterns.push_back(pat);
    if (!result.transfer) {
      for (int i = 0; i < n && !result.transfer; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && power(j, i) * power(j, i) == scale_sq) {
            result.transfer = {t, i + 1, j + 1};
            break;
          }
    }
  }
  return result;
}

}  // namespace pstlab
