#pragma once

#include "spinforge/matrix.hpp"
#include "spinforge/octet.hpp"
#include "spinforge/quaternion.hpp"
#include "spinforge/tables.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace spinforge {

/// psi = (psi1, psi2) onto H x H.
template <class T>
std::pair<Quaternion<T>, Quaternion<T>> to_quat_pair(const Oct<T>& x) {
  const auto& [a0, a1, a2, a3, a4, a5, a6, a7] = x.c;
  return {Quaternion<T>{a0 - a1, a2 - a7, a6 + a3, a4 - a5},
          Quaternion<T>{a0 + a1, a2 + a7, -(a3 - a6), -(a4 + a5)}};
}

template <class T>
Oct<T> from_quat_pair(const Quaternion<T>& q1, const Quaternion<T>& q2) {
  const T h = T(1) / T(2);
  Oct<T> x;
  x.c = {h * (q1.w + q2.w), h * (q2.w - q1.w), h * (q1.x + q2.x), h * (q1.y - q2.y),
         h * (q1.z - q2.z), -h * (q1.z + q2.z), h * (q1.y + q2.y), h * (q2.x - q1.x)};
  return x;
}

/// The Lorentz-variant map onto pairs of split quaternions.
template <class T>
std::pair<SplitQuaternion<T>, SplitQuaternion<T>> to_splitquat_pair(const Oct<T>& x) {
  const auto& [a0, a1, a2, a3, a4, a5, a6, a7] = x.c;
  return {SplitQuaternion<T>{a0 - a1, a2 - a7, a4 - a5, a6 + a3},
          SplitQuaternion<T>{a0 + a1, a2 + a7, a4 + a5, a6 - a3}};
}

template <class T>
Oct<T> from_splitquat_pair(const SplitQuaternion<T>& q1, const SplitQuaternion<T>& q2) {
  const T h = T(1) / T(2);
  Oct<T> x;
  x.c = {h * (q1.w + q2.w), h * (q2.w - q1.w), h * (q1.x + q2.x), h * (q1.z - q2.z),
         h * (q1.y + q2.y), h * (q2.y - q1.y), h * (q1.z + q2.z), h * (q2.x - q1.x)};
  return x;
}

/// (A, B) in SL(2,R) x SL(2,R) for the split-signature group G1.
template <class T>
std::pair<Mat2<T>, Mat2<T>> g1_to_sl2r_pair(const Oct<T>& x) {
  const auto& [a0, a1, a2, a3, a4, a5, a6, a7] = x.c;
  Mat2<T> a, b;
  a.m = {{{a0 - a1 + a3 + a6, a4 - a5 - a2 + a7}, {a4 - a5 + a2 - a7, a0 - a1 - a3 - a6}}};
  b.m = {{{a0 + a1 + a3 - a6, -a4 - a5 - a2 - a7}, {-a4 - a5 + a2 + a7, a0 + a1 - a3 + a6}}};
  return {a, b};
}

template <class T>
Oct<T> from_sl2r_pair(const Mat2<T>& a, const Mat2<T>& b) {
  const T& p = a.m[0][0];
  const T& q = a.m[0][1];
  const T& r = a.m[1][0];
  const T& s = a.m[1][1];
  const T& P = b.m[0][0];
  const T& Q = b.m[0][1];
  const T& R = b.m[1][0];
  const T& S = b.m[1][1];
  const T f = T(1) / T(4);
  Oct<T> x;
  x.c = {f * (p + s + P + S), f * (P + S - p - s), f * (r - q + R - Q), f * (p - s + P - S),
         f * (q + r - Q - R), f * (-q - r - Q - R), f * (p - s - P + S), f * (R - Q - r + q)};
  return x;
}

/// The 2x2 complex image for the Lorentz group G2.
template <class T>
Mat2C<T> g2_to_sl2c(const Oct<T>& x) {
  const auto& [a0, a1, a2, a3, a4, a5, a6, a7] = x.c;
  Mat2C<T> m;
  m.m = {{{Complex<T>(a0 - a7, a1 + a2), Complex<T>(-a3 - a4, a5 + a6)},
          {Complex<T>(a3 - a4, a5 - a6), Complex<T>(a0 + a7, a1 - a2)}}};
  return m;
}

template <class T>
Oct<T> from_sl2c(const Mat2C<T>& m) {
  const auto& m00 = m.m[0][0];
  const auto& m01 = m.m[0][1];
  const auto& m10 = m.m[1][0];
  const auto& m11 = m.m[1][1];
  const T h = T(1) / T(2);
  Oct<T> x;
  x.c = {h * (m00.re + m11.re), h * (m00.im + m11.im), h * (m00.im - m11.im),
         h * (m10.re - m01.re), -h * (m01.re + m10.re), h * (m01.im + m10.im),
         h * (m01.im - m10.im), h * (m11.re - m00.re)};
  return x;
}

enum class MultType { Hom, AntiHom, Neither };

std::string_view mult_type_name(MultType t);

enum class MapId { Identity, QuatPair, SplitQuatPair, Sl2rPair, Sl2c, DerivedRep };

std::string_view map_name(MapId id);

/// Exhaustively compares f(e_i * e_j) with f(e_i) f(e_j) and f(e_j) f(e_i)
/// over all 64 basis pairs, component by component. A component that is both
/// (e.g. commutative images) reports Hom.
/// DerivedRep uses right multiplication by the audited product itself.
std::vector<MultType> multiplicativity_type(MapId map, const StarTable& product);
std::vector<MultType> multiplicativity_type(MapId map, Variant v);

}  // namespace spinforge
