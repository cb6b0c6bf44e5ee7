#pragma once

#include "spinforge/matrix.hpp"
#include "spinforge/octet.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace spinforge {

enum class Source { Derived, Printed };
enum class Group { Spin4, G1, G2 };

std::string_view group_name(Group g);
std::optional<Group> parse_group(std::string_view name);

/// Variant whose star product defines the group's representation.
constexpr Variant variant_of(Group g) {
  switch (g) {
    case Group::Spin4: return Variant::Spin4;
    case Group::G1: return Variant::B1;
    case Group::G2: return Variant::B2;
  }
  return Variant::Spin4;
}

class BlockStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SamplerUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix of right multiplication x -> x * a acting on row vectors: row i is
/// e_i * a, so rep(a * b) = rep(a) rep(b) whenever the product associates.
template <class T>
Mat8<T> derived_rep(const Oct<T>& a, Variant v) {
  Mat8<T> m;
  for (std::size_t i = 0; i < 8; ++i) m.m[i] = star(Oct<T>::unit(i), a, v).c;
  return m;
}

/// The 8x8 matrices exactly as printed for each variant.
template <class T>
Mat8<T> printed_rep(const Oct<T>& x, Variant v) {
  const auto& [a0, a1, a2, a3, a4, a5, a6, a7] = x.c;
  using Row = std::array<T, 8>;
  Mat8<T> m;
  switch (v) {
    case Variant::Spin4:
      m.m = {Row{a0, a1, a2, a3, a4, a5, a6, a7},       Row{a1, a0, a7, -a6, a5, a4, -a3, a2},
             Row{-a2, -a7, a0, a5, a6, -a3, -a4, a1},   Row{-a3, a6, -a5, a0, a7, a2, -a1, -a4},
             Row{-a4, -a5, -a6, -a7, a0, a1, a2, a3},   Row{-a5, -a4, a3, -a2, a1, a0, a7, -a6},
             Row{-a6, a3, a4, -a1, -a2, -a7, a0, a5},   Row{-a7, -a2, a1, a4, -a3, a6, -a5, a0}};
      break;
    case Variant::B1:
      m.m = {Row{a0, a1, a2, a3, a4, a5, a6, a7},       Row{a1, a0, a7, -a6, a5, a4, -a3, a2},
             Row{-a2, -a7, a0, a5, a6, -a3, -a4, a1},   Row{a3, -a6, a5, a0, a7, a2, -a1, a4},
             Row{a4, a5, a6, -a7, a0, a1, a2, -a3},     Row{a5, a4, -a3, -a2, a1, a0, a7, a6},
             Row{a6, -a3, -a4, -a1, -a2, -a7, a0, -a5}, Row{-a7, -a2, a1, a4, -a3, a6, -a5, a0}};
      break;
    case Variant::B2:
      m.m = {Row{a0, a1, a2, a3, a4, a5, a6, a7},       Row{-a1, a0, -a7, a6, a5, -a4, -a3, a2},
             Row{-a2, -a7, a0, a5, a6, -a3, -a4, a1},   Row{-a3, a6, -a5, a0, a7, a2, -a1, -a4},
             Row{a4, -a5, a6, a7, a0, -a1, a2, a3},     Row{-a5, -a4, a3, -a2, a1, a0, a7, -a6},
             Row{a6, a3, -a4, a1, -a2, a7, a0, a5},     Row{a7, -a2, -a1, -a4, -a3, -a6, -a5, a0}};
      break;
    case Variant::B3:
      m.m = {Row{a0, a1, a2, a3, a4, a5, a6, a7},       Row{-a1, a0, a7, -a6, a5, -a4, a3, -a2},
             Row{a2, -a7, a0, a5, a6, a3, a4, -a1},     Row{a3, a6, -a5, a0, a7, -a2, a1, a4},
             Row{a4, -a5, -a6, -a7, a0, -a1, -a2, -a3}, Row{-a5, -a4, a3, -a2, a1, a0, a7, -a6},
             Row{-a6, a3, a4, -a1, -a2, -a7, a0, a5},   Row{-a7, -a2, a1, a4, -a3, a6, -a5, a0}};
      break;
  }
  return m;
}

template <class T>
Mat8<T> rep_matrix(const Oct<T>& a, Variant v, Source source) {
  return source == Source::Derived ? derived_rep(a, v) : printed_rep(a, v);
}

/// Splits the derived Spin4 matrix into [[U, V], [-V, U]] and returns U + iV.
template <class T>
Mat4C<T> complex_rep(const Oct<T>& a) {
  auto m = derived_rep(a, Variant::Spin4);
  Mat4C<T> out;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const T& u = m.m[r][c];
      const T& v = m.m[r][c + 4];
      if (!(m.m[r + 4][c + 4] == u) || !(m.m[r + 4][c] == T(-v))) {
        throw BlockStructureError("representation matrix is not of the form [[U, V], [-V, U]]");
      }
      out.m[r][c] = Complex<T>(u, v);
    }
  }
  return out;
}

/// Group constraint polynomial.
template <class T>
T quadratic_form(const Oct<T>& x, Group g) {
  const auto& [a0, a1, a2, a3, a4, a5, a6, a7] = x.c;
  switch (g) {
    case Group::Spin4: return a0 * a1 + a2 * a7 - a3 * a6 + a4 * a5;
    case Group::G1: return a0 * a1 + a2 * a7 + a3 * a6 - a4 * a5;
    case Group::G2: return a0 * a1 + a2 * a7 + a3 * a6 + a4 * a5;
  }
  return T(0);
}

template <class T>
struct DetFactors {
  T n1;
  T n2;
  bool holds;
};

/// N1 = sum a_i^2 + 2Q, N2 = sum a_i^2 - 2Q with Q = a0a1 + a2a7 + a4a5 - a3a6,
/// and whether det(derived Spin4 rep) == N1^2 N2^2.
DetFactors<Rational> det_factorization_check(const Oct<Rational>& a);

/// The printed sum-of-squares factors (a0+a1)^2+(a2-a7)^2+(a4-a5)^2+(a6+a3)^2
/// and (a0-a1)^2+(a2+a7)^2+(a4+a5)^2+(a6-a3)^2, with the same determinant test.
DetFactors<Rational> printed_det_factors(const Oct<Rational>& a);

inline constexpr double kMembershipTolerance = 1e-9;

bool is_group_member(const Oct<Rational>& a, Group g);
bool is_group_member(const Oct<double>& a, Group g, double tol = kMembershipTolerance);

/// Deterministic group sample. Spin4 draws two rational unit quaternions and
/// pulls them back; G1/G2 throw SamplerUnavailable because their inverse maps
/// fail the consistency audit.
Oct<Rational> sample_group_element(Group g, std::uint64_t seed);

/// Pullback of a seeded target-group sample without the audit gate: a unit
/// quaternion pair (Spin4), an SL(2,R) pair (G1) or an SL(2,C) element (G2).
Oct<Rational> pullback_sample(Group g, std::uint64_t seed);

/// Whether the inverse map for the group passes its consistency audit:
/// exact round trip on the basis, e0 maps to the identity, and every
/// component audits as homomorphism or anti-homomorphism.
bool inverse_map_consistent(Group g);

}  // namespace spinforge
