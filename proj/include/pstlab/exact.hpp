#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace pstlab {

using Int = mpz_class;  // arbitrary-precision integer
using Rat = mpq_class;  // exact rational, always canonicalized

/// Dense square matrix over an exact scalar type (Int or Rat).
/// Row-major, 0-based indexing; sizes here never exceed a few dozen.
template <class T>
class SquareMat {
 public:
  SquareMat() : n_(0) {}
  explicit SquareMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static SquareMat identity(int n) {
    SquareMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  T& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const T& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  SquareMat operator*(const SquareMat& o) const {
    SquareMat out(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const T& aik = (*this)(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < n_; ++j) out(i, j) += aik * o(k, j);
      }
    return out;
  }

  SquareMat operator+(const SquareMat& o) const {
    SquareMat out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
  }

  SquareMat operator-(const SquareMat& o) const {
    SquareMat out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
  }

  bool operator==(const SquareMat& o) const { return n_ == o.n_ && a_ == o.a_; }

  T trace() const {
    T t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const T& v : a_)
      if (v != 0) return false;
    return true;
  }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  int n_;
  std::vector<T> a_;
};

using IntMat = SquareMat<Int>;
using RatMat = SquareMat<Rat>;

/// Coefficients of a polynomial in ascending degree order: p[k] is the x^k coefficient.
using IntPoly = std::vector<Int>;

/// Multiply two polynomials (ascending coefficients).
inline IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
  if (p.empty() || q.empty()) return {};
  IntPoly out(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

/// Evaluate p at the integer x (Horner).
inline Int poly_eval(const IntPoly& p, const Int& x) {
  Int acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Synthetic division of p by (x - root). Returns the quotient and sets `remainder`.
inline IntPoly poly_divide_linear(const IntPoly& p, const Int& root, Int& remainder) {
  IntPoly q(p.size() > 1 ? p.size() - 1 : 0);
  Int carry = 0;
  for (std::size_t k = p.size(); k-- > 0;) {
    Int cur = p[k] + carry;
    if (k == 0) {
      remainder = cur;
    } else {
      q[k - 1] = cur;
      carry = cur * root;
    }
  }
  return q;
}

}  // namespace pstlab
