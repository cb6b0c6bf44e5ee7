#pragma once

#include "spinforge/matrix.hpp"
#include "spinforge/vec6.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace spinforge {

class SingularJacobian : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotTangent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class SamplerExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kManifoldTolerance = 1e-12;
inline constexpr int kNewtonMaxIterations = 25;
inline constexpr int kSampleRetries = 16;

/// (|x|^2, x . conj(x)); the manifold is the level set (1, 0).
template <class T>
std::pair<T, T> defining_map(const Vec6<T>& x) {
  return {dot(x, x), dot(x, conj(x, Variant::Spin4))};
}

/// Point of M = {|x|^2 = 1, x . conj(x) = 0}. `residual` is (|x|^2 - 1, x . conj(x)).
template <class T>
struct PointOnM {
  Vec6<T> x;
  std::pair<T, T> residual;

  static PointOnM at(const Vec6<T>& x) {
    auto [n, c] = defining_map(x);
    return {x, {n - T(1), c}};
  }

  bool on_manifold(double tol = kManifoldTolerance) const {
    if constexpr (is_exact_v<T>) {
      return residual.first == T(0) && residual.second == T(0);
    } else {
      return std::abs(residual.first) <= tol && std::abs(residual.second) <= tol;
    }
  }
};

template <class T>
struct JacobianInfo {
  Matrix<T, 2, 6> matrix;
  std::size_t rank;
};

/// Rows (2x_1..2x_6) and 2 conj(x) = (2x_6, -2x_5, 2x_4, 2x_3, -2x_2, 2x_1).
template <class T>
JacobianInfo<T> jacobian(const Vec6<T>& x, double tol = 1e-12) {
  Matrix<T, 2, 6> j;
  auto cx = conj(x, Variant::Spin4);
  for (std::size_t i = 0; i < 6; ++i) {
    j.m[0][i] = T(2) * x.c[i];
    j.m[1][i] = T(2) * cx.c[i];
  }
  return {j, rank(j, tol)};
}

struct ProjectionResult {
  PointOnM<double> point;
  int iterations = 0;
};

/// Newton iteration towards f(x) = (1, 0) with minimum-norm steps
/// dx = -J^T (J J^T)^{-1} r.
ProjectionResult project_to_manifold(const Vec6<double>& x0, double tol = kManifoldTolerance,
                                     int max_iter = kNewtonMaxIterations);

/// Four vectors spanning {v : p.v = 0, conj(p).v = 0}. The exact version is
/// orthogonal but not normalized; the floating version is orthonormal.
std::array<Vec6<Rational>, 4> tangent_basis(const PointOnM<Rational>& p);
std::array<Vec6<double>, 4> tangent_basis(const PointOnM<double>& p);

template <class T>
bool is_tangent(const PointOnM<T>& p, const Vec6<T>& v, double tol = kManifoldTolerance) {
  T a = dot(p.x, v);
  T b = dot(conj(p.x, Variant::Spin4), v);
  if constexpr (is_exact_v<T>) {
    return a == T(0) && b == T(0);
  } else {
    double scale = std::max(1.0, std::sqrt(to_double(dot(v, v))));
    return std::abs(a) <= tol * scale && std::abs(b) <= tol * scale;
  }
}

/// J_p(v) = p x v.
template <class T>
Vec6<T> almost_complex_J(const PointOnM<T>& p, const Vec6<T>& v) {
  if (!is_tangent(p, v)) throw NotTangent("vector is not tangent to M at the given point");
  return cross(p.x, v, Variant::Spin4);
}

struct ManifoldSample {
  PointOnM<double> point;
  int retries = 0;
  int iterations = 0;
};

/// Gaussian direction, normalized, then Newton-projected; bounded retries.
ManifoldSample sample_manifold(std::uint64_t seed);

/// Exact point (s, t) in S^2 x S^2 mapped onto M:
/// x = (s1 (u1+u6) + s2 (u2-u5) + s3 (u3+u4) + t1 (u1-u6) + t2 (u2+u5) + t3 (u3-u4)) / 2,
/// with s, t rational points of the unit sphere. s = t = (1,0,0) gives u1.
PointOnM<Rational> sample_manifold_exact(std::uint64_t seed);
PointOnM<Rational> manifold_point_from_spheres(const std::array<Rational, 3>& s,
                                               const std::array<Rational, 3>& t);

}  // namespace spinforge
