#pragma once

#include "spinforge/scalar.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace spinforge {

/// Selects one of the four outer products on R^6 together with its
/// conjugation and bilinear form.
enum class Variant { Spin4, B1, B2, B3 };

inline constexpr std::array<Variant, 4> kAllVariants = {Variant::Spin4, Variant::B1, Variant::B2,
                                                        Variant::B3};

enum class Form { Euclid, Form1, Form23 };

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
std::string_view form_name(Form f);

/// The bilinear form paired with a variant's bracket.
constexpr Form form_of(Variant v) {
  switch (v) {
    case Variant::Spin4: return Form::Euclid;
    case Variant::B1: return Form::Form1;
    default: return Form::Form23;
  }
}

/// Element of R^6. Slot i (0-based) holds the i+1'st coordinate of a vector
/// in the Spin(4) definitions and the i+2'nd coordinate (a2..a7) in the
/// split-signature definitions.
template <class T>
struct Vec6 {
  std::array<T, 6> c{T(0), T(0), T(0), T(0), T(0), T(0)};

  static Vec6 unit(std::size_t slot) {
    Vec6 v;
    v.c[slot] = T(1);
    return v;
  }

  T& operator[](std::size_t i) { return c[i]; }
  const T& operator[](std::size_t i) const { return c[i]; }

  friend Vec6 operator+(const Vec6& a, const Vec6& b) {
    Vec6 r;
    for (std::size_t i = 0; i < 6; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Vec6 operator-(const Vec6& a, const Vec6& b) {
    Vec6 r;
    for (std::size_t i = 0; i < 6; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Vec6 operator-(const Vec6& a) {
    Vec6 r;
    for (std::size_t i = 0; i < 6; ++i) r.c[i] = -a.c[i];
    return r;
  }
  friend Vec6 operator*(const T& s, const Vec6& a) {
    Vec6 r;
    for (std::size_t i = 0; i < 6; ++i) r.c[i] = s * a.c[i];
    return r;
  }
  friend bool operator==(const Vec6& a, const Vec6& b) { return a.c == b.c; }

  bool is_zero() const {
    for (const auto& x : c) {
      if (!(x == T(0))) return false;
    }
    return true;
  }
};

template <class T>
Vec6<T> parse_vec6(std::string_view text) {
  auto values = parse_list<T>(text);
  if (values.size() != 6) {
    throw ParseError("expected 6 components, got " + std::to_string(values.size()));
  }
  Vec6<T> v;
  for (std::size_t i = 0; i < 6; ++i) v.c[i] = values[i];
  return v;
}

template <class T>
std::string format(const Vec6<T>& v) {
  return join_scalars(v.c);
}

/// Outer product of the selected variant, transcribed component by component.
template <class T>
Vec6<T> cross(const Vec6<T>& a, const Vec6<T>& b, Variant v) {
  Vec6<T> x;
  if (v == Variant::Spin4) {
    // a[0..5] = a1..a6
    const auto& [a1, a2, a3, a4, a5, a6] = a.c;
    const auto& [b1, b2, b3, b4, b5, b6] = b.c;
    x.c[0] = -(a2 * b4 - a4 * b2 + a3 * b5 - a5 * b3);
    x.c[1] = a1 * b4 - a4 * b1 - (a3 * b6 - a6 * b3);
    x.c[2] = a1 * b5 - a5 * b1 + a2 * b6 - a6 * b2;
    x.c[3] = -(a1 * b2 - a2 * b1 + a5 * b6 - a6 * b5);
    x.c[4] = -(a1 * b3 - a3 * b1) + a4 * b6 - a6 * b4;
    x.c[5] = -(a2 * b3 - a3 * b2 + a4 * b5 - a5 * b4);
    return x;
  }
  // L(i, j) = a_i b_j - a_j b_i with i, j in 2..7.
  auto L = [&](int i, int j) -> T { return a.c[i - 2] * b.c[j - 2] - a.c[j - 2] * b.c[i - 2]; };
  switch (v) {
    case Variant::B1:
      x.c = {L(3, 5) + L(4, 6), L(2, 5) - L(4, 7), L(2, 6) + L(3, 7),
             -L(2, 3) - L(6, 7), -L(2, 4) + L(5, 7), L(3, 4) + L(5, 6)};
      break;
    case Variant::B2:
      x.c = {L(4, 6) - L(3, 5), L(2, 5) + L(4, 7), L(2, 6) + L(3, 7),
             -L(2, 3) + L(6, 7), -L(2, 4) + L(5, 7), -L(3, 4) - L(5, 6)};
      break;
    case Variant::B3:
      x.c = {-L(3, 5) - L(4, 6), L(2, 5) - L(4, 7), L(2, 6) + L(3, 7),
             L(2, 3) - L(6, 7), L(2, 4) + L(5, 7), L(3, 4) - L(5, 6)};
      break;
    case Variant::Spin4: break;
  }
  return x;
}

/// Conjugation involution of the selected variant.
template <class T>
Vec6<T> conj(const Vec6<T>& a, Variant v) {
  const auto& [p0, p1, p2, p3, p4, p5] = a.c;
  switch (v) {
    case Variant::Spin4:
    case Variant::B1: return Vec6<T>{{p5, -p4, p3, p2, -p1, p0}};
    case Variant::B2: return Vec6<T>{{-p5, p4, p3, -p2, -p1, p0}};
    case Variant::B3: return Vec6<T>{{p5, -p4, p3, -p2, p1, -p0}};
  }
  return a;
}

template <class T>
T inner(const Vec6<T>& a, const Vec6<T>& b, Form form) {
  const auto& [a2, a3, a4, a5, a6, a7] = a.c;
  const auto& [b2, b3, b4, b5, b6, b7] = b.c;
  switch (form) {
    case Form::Euclid: return a2 * b2 + a3 * b3 + a4 * b4 + a5 * b5 + a6 * b6 + a7 * b7;
    case Form::Form1:
      return a2 * b7 + a3 * b6 - a4 * b5 - a5 * b4 + a6 * b3 + a7 * b2;
    case Form::Form23:
      return a2 * b7 - a3 * b6 + a4 * b5 + a5 * b4 - a6 * b3 + a7 * b2;
  }
  return T(0);
}

template <class T>
T dot(const Vec6<T>& a, const Vec6<T>& b) {
  return inner(a, b, Form::Euclid);
}

}  // namespace spinforge
