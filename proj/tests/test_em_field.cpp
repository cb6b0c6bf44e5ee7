#include "spinforge/em_field.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace spinforge;
using Q = Rational;

TEST(EMField, FieldMatrixExamples) {
  EMField<Q> zero;
  EXPECT_EQ(field_matrix(zero), (Matrix<Q, 4, 4>{}));
  auto b3 = parse_em_field<Q>("0,0,0,0,0,1");
  auto m = field_matrix(b3);
  EXPECT_EQ(m.m[0][1], Q(1));
  EXPECT_EQ(m.m[1][0], Q(-1));
  auto e1 = parse_em_field<Q>("1,0,0,0,0,0");
  auto f = field_matrix(e1);
  EXPECT_EQ(f.m[0][3], Q(1));
  EXPECT_EQ(f.m[3][0], Q(1));
}

TEST(EMField, DefectExamples) {
  EXPECT_EQ(antisymmetry_defect(Matrix<Q, 4, 4>{}), 0.0);
  EXPECT_EQ(antisymmetry_defect_squared(field_matrix(parse_em_field<Q>("0,0,0,3,-1,2/5"))), Q(0));
  EXPECT_NEAR(antisymmetry_defect(field_matrix(parse_em_field<Q>("1,0,0,0,0,0"))),
              2 * std::sqrt(2.0), 1e-15);
  EXPECT_EQ(antisymmetry_defect_squared(field_matrix_corrected(parse_em_field<Q>("1,2,3,4,5,6"))),
            Q(0));
}

TEST(EMField, DefectIsEightTimesEnergyOfE) {
  Rng rng(44);
  for (int n = 0; n < 20; ++n) {
    EMField<Q> f;
    for (auto& v : f.e) v = random_rational(rng);
    for (auto& v : f.b) v = random_rational(rng);
    Q e2 = f.e[0] * f.e[0] + f.e[1] * f.e[1] + f.e[2] * f.e[2];
    EXPECT_EQ(antisymmetry_defect_squared(field_matrix(f)), 8 * e2);
  }
}

TEST(EMField, SpinMatrixExamples) {
  EMField<Q> zero;
  EXPECT_EQ(spin_field_matrix(zero), Mat4C<Q>{});
  auto e0 = parse_em_field<Q>("0,0,0,0,0,0,1");
  auto m = spin_field_matrix(e0);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(m.m[i][i], Complex<Q>(1));
  auto b2 = parse_em_field<Q>("0,0,0,0,1,0");
  auto s = spin_field_matrix(b2);
  EXPECT_EQ(s.m[0][3], Complex<Q>(-1));
  EXPECT_EQ(s.m[3][2], Complex<Q>(-1));
  EXPECT_EQ(spin_field_matrix_corrected(b2).m[3][2], Complex<Q>(0));
  EXPECT_EQ(spin_field_matrix_corrected(parse_em_field<Q>("0,0,0,1,0,0")).m[3][2], Complex<Q>(-1));
}

TEST(EMField, ParsingAcceptsSixToEightValues) {
  EXPECT_NO_THROW(parse_em_field<Q>("1,2,3,4,5,6"));
  auto f = parse_em_field<Q>("1,2,3,4,5,6,7,8");
  EXPECT_EQ(f.e0, Q(7));
  EXPECT_EQ(f.b0, Q(8));
  EXPECT_THROW(parse_em_field<Q>("1,2,3,4,5"), ParseError);
  EXPECT_THROW(parse_em_field<Q>("1,2,3,4,5,6,7,8,9"), ParseError);
}
