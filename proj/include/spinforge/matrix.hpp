#pragma once

#include "spinforge/scalar.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace spinforge {

/// Complex number over an arbitrary scalar (std::complex is only specified
/// for floating types).
template <class T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    T n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <class T>
std::string to_string(const Complex<T>& z) {
  return to_string(z.re) + (z.im < T(0) ? "-" : "+") + to_string(abs_value(z.im)) + "i";
}

template <class T, std::size_t R, std::size_t C>
struct Matrix {
  std::array<std::array<T, C>, R> m{};

  Matrix() {
    for (auto& row : m) row.fill(T(0));
  }

  static Matrix identity() requires(R == C) {
    Matrix a;
    for (std::size_t i = 0; i < R; ++i) a.m[i][i] = T(1);
    return a;
  }

  T& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
    return r;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix r;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) r.m[i][j] = -a.m[i][j];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.m == b.m; }

  Matrix<T, C, R> transpose() const {
    Matrix<T, C, R> t;
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) t.m[j][i] = m[i][j];
    return t;
  }

  template <std::size_t K>
  friend Matrix<T, R, K> operator*(const Matrix& a, const Matrix<T, C, K>& b) {
    Matrix<T, R, K> r;
    for (std::size_t i = 0; i < R; ++i) {
      for (std::size_t k = 0; k < C; ++k) {
        if (a.m[i][k] == T(0)) continue;
        for (std::size_t j = 0; j < K; ++j) r.m[i][j] = r.m[i][j] + a.m[i][k] * b.m[k][j];
      }
    }
    return r;
  }

  T trace() const requires(R == C) {
    T s(0);
    for (std::size_t i = 0; i < R; ++i) s = s + m[i][i];
    return s;
  }
};

template <class T>
using Mat8 = Matrix<T, 8, 8>;
template <class T>
using Mat6 = Matrix<T, 6, 6>;
template <class T>
using Mat2 = Matrix<T, 2, 2>;
template <class T>
using Mat4C = Matrix<Complex<T>, 4, 4>;
template <class T>
using Mat2C = Matrix<Complex<T>, 2, 2>;

/// Fraction-free (Bareiss) elimination with row pivoting. Every division is
/// exact, so the result is exact over the rationals and the integers.
template <class T, std::size_t N>
T determinant(Matrix<T, N, N> a) {
  if constexpr (N == 0) return T(1);
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (a.m[k][k] == T(0)) {
      std::size_t p = k + 1;
      while (p < N && a.m[p][k] == T(0)) ++p;
      if (p == N) return T(0);
      std::swap(a.m[k], a.m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) {
        a.m[i][j] = (a.m[i][j] * a.m[k][k] - a.m[i][k] * a.m[k][j]) / prev;
      }
      a.m[i][k] = T(0);
    }
    prev = a.m[k][k];
  }
  return sign * a.m[N - 1][N - 1];
}

template <class T>
T determinant2(const Mat2<T>& a) {
  return a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0];
}

template <class T>
Complex<T> determinant2(const Mat2C<T>& a) {
  return a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0];
}

/// Exact rank by Gaussian elimination. For floating types `tol` is the
/// absolute pivot threshold.
template <class T, std::size_t R, std::size_t C>
std::size_t rank(Matrix<T, R, C> a, double tol = 0.0) {
  auto negligible = [&](const T& v) {
    if constexpr (is_exact_v<T>) {
      return v == T(0);
    } else {
      return std::abs(v) <= tol;
    }
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    if constexpr (is_exact_v<T>) {
      while (p < R && negligible(a.m[p][c])) ++p;
    } else {
      for (std::size_t i = r + 1; i < R; ++i)
        if (std::abs(a.m[i][c]) > std::abs(a.m[p][c])) p = i;
    }
    if (p == R || negligible(a.m[p][c])) continue;
    std::swap(a.m[r], a.m[p]);
    for (std::size_t i = r + 1; i < R; ++i) {
      T f = a.m[i][c] / a.m[r][c];
      for (std::size_t j = c; j < C; ++j) a.m[i][j] = a.m[i][j] - f * a.m[r][j];
    }
    ++r;
  }
  return r;
}

/// Solves a x = b exactly; nullopt if a is singular.
template <class T, std::size_t N>
std::optional<std::array<T, N>> solve(Matrix<T, N, N> a, std::array<T, N> b) {
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t p = k;
    while (p < N && a.m[p][k] == T(0)) ++p;
    if (p == N) return std::nullopt;
    std::swap(a.m[k], a.m[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = 0; i < N; ++i) {
      if (i == k || a.m[i][k] == T(0)) continue;
      T f = a.m[i][k] / a.m[k][k];
      for (std::size_t j = k; j < N; ++j) a.m[i][j] = a.m[i][j] - f * a.m[k][j];
      b[i] = b[i] - f * b[k];
    }
  }
  std::array<T, N> x;
  for (std::size_t i = 0; i < N; ++i) x[i] = b[i] / a.m[i][i];
  return x;
}

}  // namespace spinforge
