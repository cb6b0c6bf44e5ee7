#pragma once

#include "spinforge/matrix.hpp"
#include "spinforge/tables.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace spinforge {

/// c[i][j][k] with [u_i, u_j] = sum_k c[i][j][k] u_k.
template <class T>
struct StructureConstants {
  std::array<std::array<std::array<T, 6>, 6>, 6> c{};

  StructureConstants() {
    for (auto& a : c)
      for (auto& b : a) b.fill(T(0));
  }

  Vec6<T> bracket(const Vec6<T>& x, const Vec6<T>& y) const {
    Vec6<T> r;
    for (std::size_t i = 0; i < 6; ++i) {
      if (x.c[i] == T(0)) continue;
      for (std::size_t j = 0; j < 6; ++j) {
        if (y.c[j] == T(0)) continue;
        T xy = x.c[i] * y.c[j];
        for (std::size_t k = 0; k < 6; ++k) {
          if (!(c[i][j][k] == T(0))) r.c[k] = r.c[k] + c[i][j][k] * xy;
        }
      }
    }
    return r;
  }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& a : c)
      for (const auto& b : a)
        for (const auto& v : b)
          if (!(v == T(0))) ++n;
    return n;
  }
};

StructureConstants<Rational> structure_constants(Variant v);
StructureConstants<Rational> structure_constants(const BracketTable& t);

/// [[a,b],c] + [[b,c],a] + [[c,a],b]
template <class T>
Vec6<T> jacobi_defect(const StructureConstants<T>& sc, const Vec6<T>& a, const Vec6<T>& b,
                      const Vec6<T>& c) {
  return sc.bracket(sc.bracket(a, b), c) + sc.bracket(sc.bracket(b, c), a) +
         sc.bracket(sc.bracket(c, a), b);
}

Vec6<Rational> jacobi_defect(const Vec6<Rational>& a, const Vec6<Rational>& b,
                             const Vec6<Rational>& c, Variant v);

/// True iff the Jacobi identity holds on all 216 basis triples, which by
/// trilinearity is equivalent to holding identically.
bool jacobi_holds(const StructureConstants<Rational>& sc);

/// ad(u_i) as a matrix acting on column coordinates: ad(u_i)[k][j] = c[i][j][k].
Mat6<Rational> adjoint(const StructureConstants<Rational>& sc, std::size_t i);

/// K[i][j] = trace(ad u_i ad u_j).
Mat6<Rational> killing_matrix(const StructureConstants<Rational>& sc);
Mat6<Rational> killing_matrix(Variant v);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

/// Inertia of a symmetric rational matrix by exact congruence (symmetric
/// Gaussian elimination with diagonal or 2x2-combination pivots).
template <std::size_t N>
Signature inertia(Matrix<Rational, N, N> a);

struct KillingResult {
  Mat6<Rational> matrix;
  Signature signature;
  bool lie_algebra = true;  // false flags a bracket that failed Jacobi
};

KillingResult killing_signature(const StructureConstants<Rational>& sc);
KillingResult killing_signature(Variant v);

/// Structure constants in the basis w_i = sum_j p[i][j] u_j. p must be
/// invertible; for a unimodular integer p the result stays integral.
StructureConstants<Rational> change_basis(const StructureConstants<Rational>& sc,
                                          const Mat6<Rational>& p);

/// Seeded unimodular integer matrix built from elementary row operations.
Mat6<Rational> random_unimodular(std::uint64_t seed, int steps = 12);

/// Expected Killing signature for the Lie algebra each variant is claimed to
/// realize: so(4), so(2,2), so(3,1), so(1,3).
Signature expected_signature(Variant v);

}  // namespace spinforge
