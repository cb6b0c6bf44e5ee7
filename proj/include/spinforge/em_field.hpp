#pragma once

#include "spinforge/matrix.hpp"

#include <array>
#include <string>
#include <string_view>

namespace spinforge {

template <class T>
struct EMField {
  T e0{0};
  T b0{0};
  std::array<T, 3> e{T(0), T(0), T(0)};
  std::array<T, 3> b{T(0), T(0), T(0)};
};

/// "E1,E2,E3,B1,B2,B3[,E0[,B0]]"
template <class T>
EMField<T> parse_em_field(std::string_view text) {
  auto v = parse_list<T>(text);
  if (v.size() < 6 || v.size() > 8) {
    throw ParseError("expected 6 to 8 field components, got " + std::to_string(v.size()));
  }
  EMField<T> f;
  f.e = {v[0], v[1], v[2]};
  f.b = {v[3], v[4], v[5]};
  if (v.size() > 6) f.e0 = v[6];
  if (v.size() > 7) f.b0 = v[7];
  return f;
}

/// F as printed: antisymmetric B block, with E in both the last column and
/// the last row with positive sign.
template <class T>
Matrix<T, 4, 4> field_matrix(const EMField<T>& f) {
  const auto& [e1, e2, e3] = f.e;
  const auto& [b1, b2, b3] = f.b;
  const T z(0);
  Matrix<T, 4, 4> m;
  m.m = {{{z, b3, -b2, e1}, {-b3, z, b1, e2}, {b2, -b1, z, e3}, {e1, e2, e3, z}}};
  return m;
}

/// F with the last row negated, which makes it antisymmetric.
template <class T>
Matrix<T, 4, 4> field_matrix_corrected(const EMField<T>& f) {
  auto m = field_matrix(f);
  for (std::size_t c = 0; c < 3; ++c) m.m[3][c] = -m.m[3][c];
  return m;
}

/// ||m + m^T||_F^2, exact.
template <class T>
T antisymmetry_defect_squared(const Matrix<T, 4, 4>& m) {
  T s(0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      T d = m.m[i][j] + m.m[j][i];
      s = s + d * d;
    }
  return s;
}

/// Frobenius norm of m + m^T.
template <class T>
double antisymmetry_defect(const Matrix<T, 4, 4>& m) {
  return std::sqrt(to_double(antisymmetry_defect_squared(m)));
}

/// The 4x4 complex matrix with the added components E0, B0, transcribed
/// verbatim (including "-B2 - iB0" at row 3, column 2).
template <class T>
Mat4C<T> spin_field_matrix(const EMField<T>& f) {
  const auto& [e1, e2, e3] = f.e;
  const auto& [b1, b2, b3] = f.b;
  const T& e0 = f.e0;
  const T& b0 = f.b0;
  using C = Complex<T>;
  Mat4C<T> m;
  m.m = {{{C(e0, e1), C(b0, b1), C(b3, e2), C(-b2, e3)},
          {C(b0, b1), C(e0, e1), C(e3, b2), C(-e2, b3)},
          {C(-b3, e2), C(-e3, b2), C(e0, -e1), C(b1, b0)},
          {C(b2, e3), C(e2, b3), C(-b2, -b0), C(e0, -e1)}}};
  return m;
}

/// Same matrix with row 3, column 2 read as -B1 - iB0, the negation of the
/// mirrored entry, following the block pattern of the complex Spin(4)
/// representation.
template <class T>
Mat4C<T> spin_field_matrix_corrected(const EMField<T>& f) {
  auto m = spin_field_matrix(f);
  m.m[3][2] = Complex<T>(-f.b[0], -f.b0);
  return m;
}

}  // namespace spinforge
