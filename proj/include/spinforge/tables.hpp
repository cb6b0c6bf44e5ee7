#pragma once

#include "spinforge/octet.hpp"

#include <array>
#include <cstdint>

namespace spinforge {

/// Integer structure tensor of a bilinear product on R^N:
/// e_i * e_j = sum_k coef[i][j][k] e_k.
template <std::size_t N>
struct StructureTable {
  std::array<std::array<std::array<std::int32_t, N>, N>, N> coef{};

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

  template <class T>
  std::array<T, N> apply(const std::array<T, N>& x, const std::array<T, N>& y) const {
    std::array<T, N> r;
    r.fill(T(0));
    for (std::size_t i = 0; i < N; ++i) {
      if (x[i] == T(0)) continue;
      for (std::size_t j = 0; j < N; ++j) {
        if (y[j] == T(0)) continue;
        T xy = x[i] * y[j];
        for (std::size_t k = 0; k < N; ++k) {
          auto c = coef[i][j][k];
          if (c != 0) r[k] = r[k] + T(c) * xy;
        }
      }
    }
    return r;
  }
};

using StarTable = StructureTable<8>;
using BracketTable = StructureTable<6>;

/// Reads the structure tensor off the star formulas. Throws if a basis
/// product is not an integer combination.
StarTable star_table(Variant v);
BracketTable bracket_table(Variant v);

template <class T>
Oct<T> apply(const StarTable& t, const Oct<T>& x, const Oct<T>& y) {
  return Oct<T>{t.apply(x.c, y.c)};
}

template <class T>
Vec6<T> apply(const BracketTable& t, const Vec6<T>& x, const Vec6<T>& y) {
  return Vec6<T>{t.apply(x.c, y.c)};
}

/// conj(p)[k] = sign[k] * p[perm[k]]
struct SignedPermutation {
  std::array<std::uint8_t, 6> perm{};
  std::array<std::int8_t, 6> sign{};

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  template <class T>
  Vec6<T> apply(const Vec6<T>& p) const {
    Vec6<T> r;
    for (std::size_t k = 0; k < 6; ++k) r.c[k] = sign[k] > 0 ? p.c[perm[k]] : T(-p.c[perm[k]]);
    return r;
  }
};

/// <p, q> = sum_t coef[t] * p[left[t]] * q[right[t]], six terms.
struct FormTerms {
  std::array<std::uint8_t, 6> left{};
  std::array<std::uint8_t, 6> right{};
  std::array<std::int8_t, 6> coef{};

  friend bool operator==(const FormTerms&, const FormTerms&) = default;

  template <class T>
  T apply(const Vec6<T>& p, const Vec6<T>& q) const {
    T s(0);
    for (std::size_t t = 0; t < 6; ++t) {
      T term = p.c[left[t]] * q.c[right[t]];
      s = coef[t] > 0 ? T(s + term) : T(s - term);
    }
    return s;
  }
};

/// Ingredients of a star product: the bracket, conjugation and form. Sign
/// patterns of the conjugation and form can be edited for repair searches.
struct ProductSpec {
  BracketTable bracket;
  SignedPermutation conj;
  FormTerms form;

  static ProductSpec from_variant(Variant v);

  /// Flips conjugation signs (bits 0..5) and form coefficients (bits 6..11).
  ProductSpec with_flips(std::uint16_t mask) const;

  template <class T>
  Oct<T> star(const Oct<T>& x, const Oct<T>& y) const {
    auto [a0, a1, p] = decompose(x);
    auto [b0, b1, q] = decompose(y);
    auto cq = conj.apply(q);
    auto cp = conj.apply(p);
    T s0 = a0 * b0 + a1 * b1 - form.apply(p, q);
    T s1 = a0 * b1 + a1 * b0 - form.apply(p, cq);
    Vec6<T> r = a0 * q + b0 * p + a1 * cq + b1 * cp + spinforge::apply(bracket, p, q);
    return Oct<T>::assemble(s0, s1, r);
  }

  StarTable table() const;
};

SignedPermutation conj_permutation(Variant v);
FormTerms form_terms(Form f);

}  // namespace spinforge
