#include "spinforge/lie.hpp"

#include <stdexcept>

namespace spinforge {

StructureConstants<Rational> structure_constants(const BracketTable& t) {
  StructureConstants<Rational> sc;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k) sc.c[i][j][k] = t.coef[i][j][k];
  return sc;
}

StructureConstants<Rational> structure_constants(Variant v) {
  return structure_constants(bracket_table(v));
}

Vec6<Rational> jacobi_defect(const Vec6<Rational>& a, const Vec6<Rational>& b,
                             const Vec6<Rational>& c, Variant v) {
  return cross(cross(a, b, v), c, v) + cross(cross(b, c, v), a, v) + cross(cross(c, a, v), b, v);
}

bool jacobi_holds(const StructureConstants<Rational>& sc) {
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k) {
        auto d = jacobi_defect(sc, Vec6<Rational>::unit(i), Vec6<Rational>::unit(j),
                               Vec6<Rational>::unit(k));
        if (!d.is_zero()) return false;
      }
  return true;
}

Mat6<Rational> adjoint(const StructureConstants<Rational>& sc, std::size_t i) {
  Mat6<Rational> ad;
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t k = 0; k < 6; ++k) ad.m[k][j] = sc.c[i][j][k];
  return ad;
}

Mat6<Rational> killing_matrix(const StructureConstants<Rational>& sc) {
  std::array<Mat6<Rational>, 6> ad;
  for (std::size_t i = 0; i < 6; ++i) ad[i] = adjoint(sc, i);
  Mat6<Rational> k;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) k.m[i][j] = (ad[i] * ad[j]).trace();
  return k;
}

Mat6<Rational> killing_matrix(Variant v) { return killing_matrix(structure_constants(v)); }

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," +
         std::to_string(s.zero) + ")";
}

template <std::size_t N>
Signature inertia(Matrix<Rational, N, N> a) {
  Signature sig;
  for (std::size_t k = 0; k < N; ++k) {
    if (a.m[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < N && a.m[j][j] == 0) ++j;
      if (j < N) {
        std::swap(a.m[k], a.m[j]);
        for (auto& row : a.m) std::swap(row[k], row[j]);
      } else {
        j = k + 1;
        while (j < N && a.m[k][j] == 0) ++j;
        if (j == N) {
          ++sig.zero;
          continue;
        }
        // Congruence by the elementary matrix adding basis vector j to k.
        for (std::size_t c = 0; c < N; ++c) a.m[k][c] += a.m[j][c];
        for (std::size_t r = 0; r < N; ++r) a.m[r][k] += a.m[r][j];
      }
    }
    const Rational d = a.m[k][k];
    (d > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < N; ++i) {
      if (a.m[i][k] == 0) continue;
      Rational f = a.m[i][k] / d;
      for (std::size_t j = k; j < N; ++j) a.m[i][j] -= f * a.m[k][j];
    }
    for (std::size_t i = k + 1; i < N; ++i) a.m[k][i] = 0;
  }
  return sig;
}

template Signature inertia<2>(Matrix<Rational, 2, 2>);
template Signature inertia<3>(Matrix<Rational, 3, 3>);
template Signature inertia<4>(Matrix<Rational, 4, 4>);
template Signature inertia<6>(Matrix<Rational, 6, 6>);

KillingResult killing_signature(const StructureConstants<Rational>& sc) {
  KillingResult r;
  r.matrix = killing_matrix(sc);
  r.signature = inertia(r.matrix);
  r.lie_algebra = jacobi_holds(sc);
  return r;
}

KillingResult killing_signature(Variant v) { return killing_signature(structure_constants(v)); }

StructureConstants<Rational> change_basis(const StructureConstants<Rational>& sc,
                                          const Mat6<Rational>& p) {
  Mat6<Rational> inv;
  for (std::size_t col = 0; col < 6; ++col) {
    std::array<Rational, 6> e{};
    e[col] = 1;
    auto x = solve(p, e);
    if (!x) throw std::invalid_argument("change of basis matrix is singular");
    for (std::size_t r = 0; r < 6; ++r) inv.m[r][col] = (*x)[r];
  }
  StructureConstants<Rational> out;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      // [w_i, w_j] in u coordinates
      Vec6<Rational> wi, wj;
      for (std::size_t a = 0; a < 6; ++a) {
        wi.c[a] = p.m[i][a];
        wj.c[a] = p.m[j][a];
      }
      auto u = sc.bracket(wi, wj);
      for (std::size_t k = 0; k < 6; ++k) {
        Rational s = 0;
        for (std::size_t m = 0; m < 6; ++m) s += u.c[m] * inv.m[m][k];
        out.c[i][j][k] = s;
      }
    }
  }
  return out;
}

Mat6<Rational> random_unimodular(std::uint64_t seed, int steps) {
  Rng rng(seed);
  auto m = Mat6<Rational>::identity();
  for (int s = 0; s < steps; ++s) {
    auto i = static_cast<std::size_t>(uniform_int(rng, 0, 5));
    auto j = static_cast<std::size_t>(uniform_int(rng, 0, 4));
    if (j >= i) ++j;
    auto k = uniform_int(rng, -2, 2);
    if (k == 0) k = 1;
    for (std::size_t c = 0; c < 6; ++c) m.m[i][c] += Rational(k) * m.m[j][c];
  }
  return m;
}

Signature expected_signature(Variant v) {
  switch (v) {
    case Variant::Spin4: return {0, 6, 0};
    case Variant::B1: return {4, 2, 0};
    case Variant::B2:
    case Variant::B3: return {3, 3, 0};
  }
  return {};
}

}  // namespace spinforge
