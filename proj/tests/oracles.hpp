#pragma once

// Reference computations that share no code with the library: Leibniz
// determinants, a quaternion-pair model of the Spin(4) product, and Eigen
// for floating linear algebra.

#include "spinforge/matrix.hpp"
#include "spinforge/octet.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <numeric>

namespace oracle {

using spinforge::Rational;

/// Sum over permutations; O(N!) but independent of any elimination scheme.
template <class T, std::size_t N>
T leibniz_det(const spinforge::Matrix<T, N, N>& a) {
  std::array<std::size_t, N> perm;
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  T total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(1);
    for (std::size_t i = 0; i < N && term != T(0); ++i) term *= a.m[i][perm[i]];
    total += inversions % 2 ? T(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

using Quat = std::array<double, 4>;

inline Quat hamilton(const Quat& p, const Quat& q) {
  // Left-multiplication matrix of p applied to q.
  Eigen::Matrix4d L;
  L << p[0], -p[1], -p[2], -p[3],
       p[1],  p[0], -p[3],  p[2],
       p[2],  p[3],  p[0], -p[1],
       p[3], -p[2],  p[1],  p[0];
  Eigen::Vector4d r = L * Eigen::Vector4d(q[0], q[1], q[2], q[3]);
  return {r[0], r[1], r[2], r[3]};
}

/// Rows 0..3: first quaternion, rows 4..7: second quaternion, as printed
/// for the map to H x H.
inline Eigen::Matrix<double, 8, 8> psi_matrix() {
  Eigen::Matrix<double, 8, 8> m = Eigen::Matrix<double, 8, 8>::Zero();
  // (a0 - a1) + (a2 - a7)i + (a6 + a3)j + (a4 - a5)k
  m(0, 0) = 1; m(0, 1) = -1;
  m(1, 2) = 1; m(1, 7) = -1;
  m(2, 6) = 1; m(2, 3) = 1;
  m(3, 4) = 1; m(3, 5) = -1;
  // (a0 + a1) + (a2 + a7)i - (a3 - a6)j - (a4 + a5)k
  m(4, 0) = 1; m(4, 1) = 1;
  m(5, 2) = 1; m(5, 7) = 1;
  m(6, 3) = -1; m(6, 6) = 1;
  m(7, 4) = -1; m(7, 5) = -1;
  return m;
}

inline Eigen::Matrix<double, 8, 1> to_eigen(const spinforge::Oct<double>& x) {
  Eigen::Matrix<double, 8, 1> v;
  for (int i = 0; i < 8; ++i) v[i] = x.c[static_cast<std::size_t>(i)];
  return v;
}

/// Spin(4) product transported through the quaternion pair: first factor
/// multiplies in order, second in reverse.
inline spinforge::Oct<double> spin4_star(const spinforge::Oct<double>& x,
                                         const spinforge::Oct<double>& y) {
  auto m = psi_matrix();
  Eigen::Matrix<double, 8, 1> px = m * to_eigen(x), py = m * to_eigen(y);
  Quat x1{px[0], px[1], px[2], px[3]}, x2{px[4], px[5], px[6], px[7]};
  Quat y1{py[0], py[1], py[2], py[3]}, y2{py[4], py[5], py[6], py[7]};
  auto z1 = hamilton(x1, y1);
  auto z2 = hamilton(y2, x2);
  Eigen::Matrix<double, 8, 1> z;
  z << z1[0], z1[1], z1[2], z1[3], z2[0], z2[1], z2[2], z2[3];
  Eigen::Matrix<double, 8, 1> sol = m.fullPivLu().solve(z);
  spinforge::Oct<double> out;
  for (int i = 0; i < 8; ++i) out.c[static_cast<std::size_t>(i)] = sol[i];
  return out;
}

inline spinforge::Oct<double> as_double(const spinforge::Oct<Rational>& x) {
  spinforge::Oct<double> d;
  for (std::size_t i = 0; i < 8; ++i) d.c[i] = x.c[i].convert_to<double>();
  return d;
}

/// Sign counts of the eigenvalues of a symmetric matrix.
template <int N>
std::array<int, 3> eigen_signature(const Eigen::Matrix<double, N, N>& k, double eps = 1e-9) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, N, N>> es(k);
  std::array<int, 3> s{0, 0, 0};
  for (int i = 0; i < N; ++i) {
    double e = es.eigenvalues()[i];
    if (e > eps) ++s[0];
    else if (e < -eps) ++s[1];
    else ++s[2];
  }
  return s;
}

}  // namespace oracle
