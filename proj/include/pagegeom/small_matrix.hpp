#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "pagegeom/dual.hpp"

namespace pagegeom {

template <class T, std::size_t N>
using Vec = std::array<T, N>;
template <class T, std::size_t N>
using Mat = std::array<std::array<T, N>, N>;
template <class T, std::size_t N>
using Rank3 = std::array<Mat<T, N>, N>;
template <class T, std::size_t N>
using Rank4 = std::array<Rank3<T, N>, N>;

template <class T, std::size_t N>
Mat<T, N> identity_matrix() {
  Mat<T, N> m{};
  for (std::size_t i = 0; i < N; ++i) m[i][i] = T(1.0);
  return m;
}

template <class T, std::size_t N>
Mat<T, N> transpose(const Mat<T, N>& m) {
  Mat<T, N> t{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) t[i][j] = m[j][i];
  return t;
}

template <class T, std::size_t N>
Mat<T, N> multiply(const Mat<T, N>& a, const Mat<T, N>& b) {
  Mat<T, N> c{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t j = 0; j < N; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Gauss-Jordan with partial pivoting on the scalar value. Works for dual
// numbers, so the derivative of the inverse comes out exact.
template <class T, std::size_t N>
Mat<T, N> inverse(Mat<T, N> a) {
  Mat<T, N> inv = identity_matrix<T, N>();
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    double best = std::abs(value_of(a[col][col]));
    for (std::size_t row = col + 1; row < N; ++row) {
      const double cand = std::abs(value_of(a[row][col]));
      if (cand > best) {
        best = cand;
        pivot = row;
      }
    }
    if (best == 0.0) throw std::domain_error("inverse: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const T scale = T(1.0) / a[col][col];
    for (std::size_t j = 0; j < N; ++j) {
      a[col][j] = a[col][j] * scale;
      inv[col][j] = inv[col][j] * scale;
    }
    for (std::size_t row = 0; row < N; ++row) {
      if (row == col) continue;
      const T factor = a[row][col];
      if (value_of(factor) == 0.0 && !is_dual<T>::value) continue;
      for (std::size_t j = 0; j < N; ++j) {
        a[row][j] = a[row][j] - factor * a[col][j];
        inv[row][j] = inv[row][j] - factor * inv[col][j];
      }
    }
  }
  return inv;
}

// Upper-triangular R with R^T R = g. Rows of R form an orthonormal coframe
// for the metric g written in coordinate differentials.
template <class T, std::size_t N>
Mat<T, N> cholesky_upper(const Mat<T, N>& g) {
  using std::sqrt;
  Mat<T, N> r{};
  for (std::size_t i = 0; i < N; ++i) {
    T diag = g[i][i];
    for (std::size_t k = 0; k < i; ++k) diag = diag - r[k][i] * r[k][i];
    if (!(value_of(diag) > 0.0)) throw std::domain_error("cholesky_upper: metric not positive definite");
    r[i][i] = sqrt(diag);
    for (std::size_t j = i + 1; j < N; ++j) {
      T s = g[i][j];
      for (std::size_t k = 0; k < i; ++k) s = s - r[k][i] * r[k][j];
      r[i][j] = s / r[i][i];
    }
  }
  return r;
}

template <std::size_t N>
double max_abs(const Mat<double, N>& m) {
  double out = 0.0;
  for (const auto& row : m)
    for (double x : row) out = std::max(out, std::abs(x));
  return out;
}

}  // namespace pagegeom
