#include "spinforge/matrix.hpp"
#include "spinforge/reps.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace spinforge;
using Q = Rational;

namespace {

template <std::size_t N>
Matrix<Q, N, N> random_matrix(Rng& rng, int zero_every = 0) {
  Matrix<Q, N, N> a;
  std::size_t n = 0;
  for (auto& row : a.m)
    for (auto& v : row) v = (zero_every && ++n % zero_every == 0) ? Q(0) : random_rational(rng, 4);
  return a;
}

}  // namespace

TEST(Matrix, BareissMatchesLeibniz) {
  Rng rng(8);
  for (int n = 0; n < 20; ++n) {
    auto a = random_matrix<5>(rng, n % 3 ? 0 : 2);
    EXPECT_EQ(determinant(a), oracle::leibniz_det(a));
  }
}

TEST(Matrix, BareissMatchesLeibnizOnRepresentationMatrices) {
  Rng rng(9);
  for (int n = 0; n < 3; ++n) {
    Oct<Q> x;
    for (auto& v : x.c) v = random_rational(rng, 3);
    auto m = derived_rep(x, Variant::Spin4);
    EXPECT_EQ(determinant(m), oracle::leibniz_det(m));
  }
}

TEST(Matrix, DeterminantNeedsPivoting) {
  Matrix<Q, 3, 3> a;
  a.m = {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
  EXPECT_EQ(determinant(a), Q(-1));
  Matrix<Q, 3, 3> s;
  s.m = {{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}};
  EXPECT_EQ(determinant(s), Q(0));
}

TEST(Matrix, RankAndSolve) {
  Matrix<Q, 2, 3> r;
  r.m = {{{1, 2, 3}, {2, 4, 6}}};
  EXPECT_EQ(rank(r), 1u);
  Matrix<double, 2, 3> rd;
  rd.m = {{{1, 2, 3}, {2, 4, 6.0000000001}}};
  EXPECT_EQ(rank(rd, 1e-6), 1u);
  EXPECT_EQ(rank(rd, 1e-14), 2u);

  Rng rng(10);
  auto a = random_matrix<4>(rng);
  std::array<Q, 4> x{Q(1), Q(-2), Q(1, 3), Q(0)};
  std::array<Q, 4> b{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) b[i] += a.m[i][j] * x[j];
  if (determinant(a) != 0) EXPECT_EQ(solve(a, b), x);
}

TEST(Matrix, ComplexArithmetic) {
  Complex<Q> i(0, 1);
  EXPECT_EQ(i * i, Complex<Q>(-1));
  EXPECT_EQ(Complex<Q>(3, 4) / Complex<Q>(3, 4), Complex<Q>(1));
  Mat2C<Q> m;
  m.m = {{{Complex<Q>(1), i}, {i, Complex<Q>(1)}}};
  EXPECT_EQ(determinant2(m), Complex<Q>(2));
  EXPECT_EQ(to_string(Complex<Q>(Q(1, 2), Q(-3))), "1/2-3i");
}
