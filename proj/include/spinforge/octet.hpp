#pragma once

#include "spinforge/vec6.hpp"

#include <array>
#include <tuple>

namespace spinforge {

/// Element a0 e0 + a1 e1 + p of R^8, with p = (a2..a7) viewed as a Vec6.
template <class T>
struct Oct {
  std::array<T, 8> c{T(0), T(0), T(0), T(0), T(0), T(0), T(0), T(0)};

  static Oct unit(std::size_t slot) {
    Oct v;
    v.c[slot] = T(1);
    return v;
  }

  static Oct assemble(const T& a0, const T& a1, const Vec6<T>& p) {
    Oct x;
    x.c[0] = a0;
    x.c[1] = a1;
    for (std::size_t i = 0; i < 6; ++i) x.c[i + 2] = p.c[i];
    return x;
  }

  const T& scalar_part() const { return c[0]; }
  const T& split_part() const { return c[1]; }
  Vec6<T> vector_part() const {
    Vec6<T> p;
    for (std::size_t i = 0; i < 6; ++i) p.c[i] = c[i + 2];
    return p;
  }

  T& operator[](std::size_t i) { return c[i]; }
  const T& operator[](std::size_t i) const { return c[i]; }

  friend Oct operator+(const Oct& a, const Oct& b) {
    Oct r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Oct operator-(const Oct& a, const Oct& b) {
    Oct r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Oct operator-(const Oct& a) {
    Oct r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = -a.c[i];
    return r;
  }
  friend Oct operator*(const T& s, const Oct& a) {
    Oct r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
    return r;
  }
  friend bool operator==(const Oct& a, const Oct& b) { return a.c == b.c; }
};

template <class T>
std::tuple<T, T, Vec6<T>> decompose(const Oct<T>& x) {
  return {x.c[0], x.c[1], x.vector_part()};
}

template <class T>
Oct<T> parse_oct(std::string_view text) {
  auto values = parse_list<T>(text);
  if (values.size() != 8) {
    throw ParseError("expected 8 components, got " + std::to_string(values.size()));
  }
  Oct<T> x;
  for (std::size_t i = 0; i < 8; ++i) x.c[i] = values[i];
  return x;
}

template <class T>
std::string format(const Oct<T>& x) {
  return join_scalars(x.c);
}

namespace detail {

// (a0 b0 + s11 a1 b1 - <p,q>) e0 + (a0 b1 + a1 b0 - <p, conj q>) e1
//   + a0 q + b0 p + a1 conj(q) + (b1 or b0) conj(p) + [p, q]
template <class T>
Oct<T> star_template(const Oct<T>& x, const Oct<T>& y, Variant v, bool plus_a1b1,
                     bool literal_b0_term) {
  auto [a0, a1, p] = decompose(x);
  auto [b0, b1, q] = decompose(y);
  const Form form = form_of(v);
  const auto cq = conj(q, v);
  const auto cp = conj(p, v);
  T s0 = plus_a1b1 ? T(a0 * b0 + a1 * b1 - inner(p, q, form))
                   : T(a0 * b0 - a1 * b1 - inner(p, q, form));
  T s1 = a0 * b1 + a1 * b0 - inner(p, cq, form);
  const T& pcoef = literal_b0_term ? b0 : b1;
  Vec6<T> r = a0 * q + b0 * p + a1 * cq + pcoef * cp + cross(p, q, v);
  return Oct<T>::assemble(s0, s1, r);
}

}  // namespace detail

/// Star product on R^8.
///
/// Spin4 uses the expanded coordinate formulas x0..x7 verbatim; they are the
/// canonical definition (the compact form disagrees in the sign of a1 b1, see
/// star_compact_printed). B1..B3 instantiate the compact template with the
/// variant's bracket, conjugation and form, pairing b1 with conj(p).
template <class T>
Oct<T> star(const Oct<T>& x, const Oct<T>& y, Variant v) {
  if (v != Variant::Spin4) return detail::star_template(x, y, v, true, false);
  const auto& [a0, a1, a2, a3, a4, a5, a6, a7] = x.c;
  const auto& [b0, b1, b2, b3, b4, b5, b6, b7] = y.c;
  Oct<T> r;
  r.c[0] = a0 * b0 + a1 * b1 - a2 * b2 - a3 * b3 - a4 * b4 - a5 * b5 - a6 * b6 - a7 * b7;
  r.c[1] = a0 * b1 + a1 * b0 - a2 * b7 + a3 * b6 - a4 * b5 - a5 * b4 + a6 * b3 - a7 * b2;
  r.c[2] = a0 * b2 + a2 * b0 + a1 * b7 + a7 * b1 - (a3 * b5 - a5 * b3 + a4 * b6 - a6 * b4);
  r.c[3] = a0 * b3 + a3 * b0 - a1 * b6 - a6 * b1 + a2 * b5 - a5 * b2 - (a4 * b7 - a7 * b4);
  r.c[4] = a0 * b4 + a4 * b0 + a1 * b5 + a5 * b1 + a2 * b6 - a6 * b2 + a3 * b7 - a7 * b3;
  r.c[5] = a0 * b5 + a5 * b0 + a1 * b4 + a4 * b1 - (a2 * b3 - a3 * b2 + a6 * b7 - a7 * b6);
  r.c[6] = a0 * b6 + a6 * b0 - a1 * b3 - a3 * b1 - (a2 * b4 - a4 * b2) + a5 * b7 - a7 * b5;
  r.c[7] = a0 * b7 + a7 * b0 + a1 * b2 + a2 * b1 - (a3 * b4 - a4 * b3 + a5 * b6 - a6 * b5);
  return r;
}

/// The compact Spin4 product as printed, with "a0 b0 - a1 b1" in the e0 slot.
template <class T>
Oct<T> star_compact_printed(const Oct<T>& x, const Oct<T>& y) {
  return detail::star_template(x, y, Variant::Spin4, false, false);
}

/// The split-signature product with the printed "b0 conj(p)" term taken literally.
template <class T>
Oct<T> star_literal_b0(const Oct<T>& x, const Oct<T>& y, Variant v) {
  return detail::star_template(x, y, v, true, true);
}

template <class T>
using BasisTable = std::array<std::array<Oct<T>, 8>, 8>;

/// table[i][j] = e_i * e_j.
template <class T = Rational>
BasisTable<T> basis_table(Variant v) {
  BasisTable<T> t;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) t[i][j] = star(Oct<T>::unit(i), Oct<T>::unit(j), v);
  }
  return t;
}

}  // namespace spinforge
