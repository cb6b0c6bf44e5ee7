#pragma once

#include "spinforge/scalar.hpp"

#include <array>
#include <string>

namespace spinforge {

namespace detail {

// Shared storage for the two four-dimensional algebras. Sig selects the
// multiplication table.
template <class T, bool Split>
struct QuaternionBase {
  T w{0}, x{0}, y{0}, z{0};

  static QuaternionBase real(T s) { return {s, T(0), T(0), T(0)}; }

  friend QuaternionBase operator+(const QuaternionBase& a, const QuaternionBase& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend QuaternionBase operator-(const QuaternionBase& a, const QuaternionBase& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend QuaternionBase operator-(const QuaternionBase& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend QuaternionBase operator*(const T& s, const QuaternionBase& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
  }
  friend bool operator==(const QuaternionBase& a, const QuaternionBase& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }

  friend QuaternionBase operator*(const QuaternionBase& a, const QuaternionBase& b) {
    if constexpr (!Split) {
      // i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j
      return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
              a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
              a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
              a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    } else {
      // i^2 = -1, j^2 = k^2 = 1, ij = k, jk = -i, ki = j
      return {a.w * b.w - a.x * b.x + a.y * b.y + a.z * b.z,
              a.w * b.x + a.x * b.w - a.y * b.z + a.z * b.y,
              a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
              a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
  }

  QuaternionBase conjugate() const { return {w, -x, -y, -z}; }

  /// w^2 + x^2 + y^2 + z^2, or the split pseudo-norm w^2 + x^2 - y^2 - z^2.
  T norm() const {
    if constexpr (!Split) {
      return w * w + x * x + y * y + z * z;
    } else {
      return w * w + x * x - y * y - z * z;
    }
  }

  std::array<T, 4> components() const { return {w, x, y, z}; }
};

}  // namespace detail

template <class T>
using Quaternion = detail::QuaternionBase<T, false>;

template <class T>
using SplitQuaternion = detail::QuaternionBase<T, true>;

template <class T, bool Split>
std::string format(const detail::QuaternionBase<T, Split>& q) {
  return join_scalars(q.components());
}

template <class T>
Quaternion<T> quat_mul(const Quaternion<T>& p, const Quaternion<T>& q) {
  return p * q;
}

template <class T>
SplitQuaternion<T> splitquat_mul(const SplitQuaternion<T>& p, const SplitQuaternion<T>& q) {
  return p * q;
}

/// Rational point on S^3 from a point of R^3 by inverse stereographic projection.
template <class T>
Quaternion<T> unit_quaternion_from(const T& u, const T& v, const T& w) {
  T t = u * u + v * v + w * w;
  T d = T(1) + t;
  return {(T(1) - t) / d, T(2) * u / d, T(2) * v / d, T(2) * w / d};
}

}  // namespace spinforge
