#include "pstlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "pstlab/errors.hpp"

namespace pstlab {

namespace {

constexpr double kOffDiagTarget = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) sum += a[static_cast<std::size_t>(i) * n + j] * a[static_cast<std::size_t>(i) * n + j];
  return std::sqrt(sum);
}

}  // namespace

EigenDecomposition eigendecompose(const Graph& g) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = g.adj0(i, j) ? 1.0 : 0.0;

  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  auto at = [n](std::vector<double>& m, int i, int j) -> double& {
    return m[static_cast<std::size_t>(i) * n + j];
  };

  int sweep = 0;
  while (off_diagonal_norm(a, n) >= kOffDiagTarget) {
    if (++sweep > kMaxSweeps)
      throw numerical_error("Jacobi eigensolver did not converge within " +
                            std::to_string(kMaxSweeps) + " sweeps");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double app = at(a, p, p);
        const double aqq = at(a, q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        // stable tangent of the rotation angle
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = at(a, k, p);
          const double akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(a, p, k);
          const double aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = at(v, k, p);
          const double vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
    return a[static_cast<std::size_t>(x) * n + x] > a[static_cast<std::size_t>(y) * n + y];
  });

  EigenDecomposition dec;
  dec.n = n;
  dec.values.resize(n);
  dec.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    dec.values[k] = a[static_cast<std::size_t>(perm[k]) * n + perm[k]];
    for (int r = 0; r < n; ++r)
      dec.vectors[static_cast<std::size_t>(r) * n + k] = v[static_cast<std::size_t>(r) * n + perm[k]];
  }
  return dec;
}

IntPoly char_poly(const Graph& g) {
  const int n = g.order();
  IntMat a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g.adj0(i, j) ? 1 : 0;

  // Faddeev-LeVerrier: M <- A*M + c*I, c_{n-k} = -tr(A*M_k)/k. Every
  // division is exact over the integers.
  IntPoly coeffs(n + 1);
  coeffs[n] = 1;
  IntMat m = IntMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    Int tr = m.trace();
    Int c, rem;
    mpz_fdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), tr.get_mpz_t(), Int(k).get_mpz_t());
    if (rem != 0) throw numerical_error("Faddeev-LeVerrier trace not divisible by step index");
    c = -c;
    coeffs[n - k] = c;
    for (int i = 0; i < n; ++i) m(i, i) += c;
  }
  return coeffs;
}

int IntegralCertificate::multiplicity_of(long lambda) const {
  for (const auto& [l, m] : roots)
    if (l == lambda) return m;
  return 0;
}

IntegralityResult integral_certificate(const Graph& g) {
  IntPoly p = char_poly(g);
  const auto degrees = g.degree_sequence();
  const long bound = *std::max_element(degrees.begin(), degrees.end());

  std::vector<std::pair<long, int>> roots;
  for (long lambda = bound; lambda >= -bound; --lambda) {
    int mult = 0;
    while (p.size() > 1) {
      Int rem;
      IntPoly q = poly_divide_linear(p, Int(lambda), rem);
      if (rem != 0) break;
      p = std::move(q);
      ++mult;
    }
    if (mult > 0) roots.emplace_back(lambda, mult);
  }

  IntegralityResult out;
  out.residual = p;
  if (p.size() == 1) {
    IntegralCertificate cert;
    cert.roots = std::move(roots);
    cert.charpoly = char_poly(g);
    out.certificate = std::move(cert);
  }
  return out;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw numerical_error(std::string("projector invariant violated: ") + what);
}

}  // namespace

std::vector<RationalProjector> rational_projectors(const Graph& g,
                                                   const IntegralCertificate& cert) {
  const int n = g.order();
  {
    std::vector<long> seen;
    int total = 0;
    for (const auto& [lambda, mult] : cert.roots) {
      if (std::find(seen.begin(), seen.end(), lambda) != seen.end())
        throw invalid_input("malformed certificate: duplicate eigenvalue " +
                            std::to_string(lambda));
      seen.push_back(lambda);
      total += mult;
    }
    if (total != n) throw invalid_input("malformed certificate: multiplicities do not sum to n");
  }

  IntMat a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g.adj0(i, j) ? 1 : 0;

  // Integer numerators N_r = prod_{s != r}(A - lambda_s I) with scalar
  // denominators d_r = prod_{s != r}(lambda_r - lambda_s); all invariant
  // checks run on the integer side, entrywise exact.
  std::vector<IntMat> nums;
  std::vector<Int> dens;
  for (const auto& [lambda_r, mult_r] : cert.roots) {
    IntMat num = IntMat::identity(n);
    Int den = 1;
    for (const auto& [lambda_s, mult_s] : cert.roots) {
      if (lambda_s == lambda_r) continue;
      IntMat factor = a;
      for (int i = 0; i < n; ++i) factor(i, i) -= lambda_s;
      num = num * factor;
      den *= Int(lambda_r) - Int(lambda_s);
    }
    require(num.is_symmetric(), "symmetry");
    require(num.trace() == Int(mult_r) * den, "trace equals multiplicity");
    {
      IntMat sq = num * num;  // E*E == E  <=>  N*N == d*N
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) require(sq(i, j) == den * num(i, j), "idempotence");
    }
    {
      IntMat an = a * num;  // A*E == lambda*E  <=>  A*N == lambda*N
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          require(an(i, j) == Int(lambda_r) * num(i, j), "eigenvalue equation");
    }
    nums.push_back(std::move(num));
    dens.push_back(std::move(den));
  }

  std::vector<RationalProjector> projectors;
  RatMat total(n);
  for (std::size_t r = 0; r < nums.size(); ++r) {
    RationalProjector proj;
    proj.lambda = cert.roots[r].first;
    proj.n = n;
    proj.entries = RatMat(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat value(nums[r](i, j), dens[r]);
        value.canonicalize();
        proj.entries(i, j) = value;
        total(i, j) += proj.entries(i, j);
      }
    projectors.push_back(std::move(proj));
  }
  require(total == RatMat::identity(n), "resolution of identity");
  return projectors;
}

std::string format_poly(const IntPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Int& c = p[k];
    if (c == 0 && !(first && k == 0)) continue;
    Int abs_c = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool show_coeff = (abs_c != 1) || k == 0;
    if (show_coeff) out << abs_c.get_str();
    if (k > 0) {
      if (show_coeff) out << "*";
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

std::string format_certificate(const IntegralityResult& result) {
  std::ostringstream out;
  if (result.is_integral()) {
    const auto& cert = *result.certificate;
    out << "integral\n";
    for (const auto& [lambda, mult] : cert.roots) out << lambda << " " << mult << "\n";
    out << "charpoly: " << format_poly(cert.charpoly) << "\n";
  } else {
    out << "not integral; residual " << format_poly(result.residual) << "\n";
  }
  return out.str();
}

}  // namespace pstlab
