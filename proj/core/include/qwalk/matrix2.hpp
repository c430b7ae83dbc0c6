#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "qwalk/types.hpp"

namespace qwalk {

/// Row-major 2x2 complex matrix.
struct Matrix2 {
  std::array<cplx, 4> m{};

  constexpr cplx& operator()(int r, int c) noexcept { return m[static_cast<std::size_t>(2 * r + c)]; }
  constexpr const cplx& operator()(int r, int c) const noexcept {
    return m[static_cast<std::size_t>(2 * r + c)];
  }

  static constexpr Matrix2 identity() noexcept { return {{cplx{1.0}, cplx{}, cplx{}, cplx{1.0}}}; }
  static constexpr Matrix2 diag(cplx d0, cplx d1) noexcept { return {{d0, cplx{}, cplx{}, d1}}; }

  cplx trace() const noexcept { return m[0] + m[3]; }
  cplx det() const noexcept { return m[0] * m[3] - m[1] * m[2]; }

  Matrix2 adjoint() const noexcept {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
  }

  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) noexcept {
    return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
             a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
  }
  friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) noexcept {
    return {{a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]}};
  }
  friend Matrix2 operator-(const Matrix2& a, const Matrix2& b) noexcept {
    return {{a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]}};
  }
  friend Matrix2 operator*(cplx s, const Matrix2& a) noexcept {
    return {{s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]}};
  }
  friend CoinSpinor operator*(const Matrix2& a, const CoinSpinor& v) noexcept {
    return {a.m[0] * v.a0 + a.m[1] * v.a1, a.m[2] * v.a0 + a.m[3] * v.a1};
  }
};

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const Matrix2& a, const Matrix2& b) noexcept {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

/// Deviation of a^dagger a from the identity, entrywise max.
inline double unitarity_defect(const Matrix2& a) noexcept {
  return max_abs_diff(a.adjoint() * a, Matrix2::identity());
}

/// a^n by repeated squaring.
inline Matrix2 power(Matrix2 a, long long n) noexcept {
  Matrix2 r = Matrix2::identity();
  while (n > 0) {
    if (n & 1) r = r * a;
    a = a * a;
    n >>= 1;
  }
  return r;
}

inline cplx inner(const CoinSpinor& u, const CoinSpinor& v) noexcept {
  return std::conj(u.a0) * v.a0 + std::conj(u.a1) * v.a1;
}

}  // namespace qwalk
