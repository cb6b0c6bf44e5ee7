#include "spinforge/lie.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace spinforge;
using Q = Rational;

namespace {

Eigen::Matrix<double, 6, 6> to_eigen(const Mat6<Q>& m) {
  Eigen::Matrix<double, 6, 6> r;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      r(i, j) = m.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].convert_to<double>();
  return r;
}

Signature as_signature(const std::array<int, 3>& s) { return {s[0], s[1], s[2]}; }

}  // namespace

TEST(Lie, JacobiExamples) {
  auto u = [](std::size_t k) { return Vec6<Q>::unit(k - 1); };
  EXPECT_TRUE(jacobi_defect(u(1), u(2), u(3), Variant::Spin4).is_zero());
  Rng rng(2);
  Vec6<Q> a, b;
  for (auto& x : a.c) x = random_rational(rng);
  for (auto& x : b.c) x = random_rational(rng);
  for (auto v : kAllVariants) {
    EXPECT_TRUE(jacobi_defect(a, a, b, v).is_zero());
    EXPECT_TRUE(jacobi_holds(structure_constants(v)));
    EXPECT_EQ(structure_constants(v).nonzero_count(), 24u);
  }
}

TEST(Lie, KillingSignatures) {
  EXPECT_EQ(killing_signature(Variant::Spin4).signature, (Signature{0, 6, 0}));
  EXPECT_EQ(killing_signature(Variant::B1).signature, (Signature{4, 2, 0}));
  EXPECT_EQ(killing_signature(Variant::B2).signature, (Signature{3, 3, 0}));
  EXPECT_EQ(killing_signature(Variant::B3).signature, (Signature{3, 3, 0}));
  for (auto v : kAllVariants) EXPECT_EQ(killing_signature(v).signature, expected_signature(v));
  EXPECT_EQ(to_string(Signature{4, 2, 0}), "(4,2,0)");
}

TEST(Lie, KillingSignatureMatchesEigenvalueOracle) {
  for (auto v : kAllVariants) {
    auto k = killing_matrix(v);
    EXPECT_EQ(k, k.transpose());
    EXPECT_EQ(killing_signature(v).signature, as_signature(oracle::eigen_signature<6>(to_eigen(k))));
  }
}

TEST(Lie, InertiaHandlesZeroDiagonal) {
  Matrix<Q, 2, 2> h;
  h.m = {{{0, 1}, {1, 0}}};
  EXPECT_EQ(inertia(h), (Signature{1, 1, 0}));
  Matrix<Q, 3, 3> d;
  d.m = {{{0, 0, 0}, {0, 2, 0}, {0, 0, -3}}};
  EXPECT_EQ(inertia(d), (Signature{1, 1, 1}));
  Matrix<Q, 4, 4> z;
  z.m = {{{0, 1, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {0, 0, 0, 0}}};
  EXPECT_EQ(inertia(z), (Signature{1, 2, 1}));
}

TEST(Lie, SignatureInvariantUnderChangeOfBasis) {
  for (auto v : kAllVariants) {
    auto sc = structure_constants(v);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto p = random_unimodular(seed);
      EXPECT_EQ(determinant(p) * determinant(p), Q(1));
      auto moved = change_basis(sc, p);
      EXPECT_TRUE(jacobi_holds(moved));
      EXPECT_EQ(killing_signature(moved).signature, killing_signature(sc).signature);
    }
  }
}

TEST(Lie, AdjointRepresentsTheBracket) {
  auto sc = structure_constants(Variant::B2);
  for (std::size_t i = 0; i < 6; ++i) {
    auto ad = adjoint(sc, i);
    for (std::size_t j = 0; j < 6; ++j) {
      auto br = sc.bracket(Vec6<Q>::unit(i), Vec6<Q>::unit(j));
      for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(ad.m[k][j], br.c[k]);
    }
  }
}

TEST(Lie, BrokenBracketIsNotALieAlgebra) {
  auto t = bracket_table(Variant::Spin4);
  for (std::size_t k = 0; k < 6; ++k) {
    t.coef[0][1][k] = -t.coef[0][1][k];
    t.coef[1][0][k] = -t.coef[1][0][k];
  }
  auto sc = structure_constants(t);
  EXPECT_FALSE(jacobi_holds(sc));
  EXPECT_FALSE(killing_signature(sc).lie_algebra);
}
