#include <gtest/gtest.h>

#include "generators.hpp"
#include "ternions/errors.hpp"
#include "ternions/oracles.hpp"
#include "ternions/ternion.hpp"

using namespace ternions;

namespace {

const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F7 = FieldSpec::prime(7);

// Full 2x2 product, written out independently of the triple formula.
Ternion matrix_product(const Ternion& s, const Ternion& t) {
  const FieldSpec& f = s.field();
  const Scalar zero = Scalar::zero(f);
  const Scalar a[2][2] = {{s.a11, s.a12}, {zero, s.a22}};
  const Scalar b[2][2] = {{t.a11, t.a12}, {zero, t.a22}};
  Scalar c[2][2] = {{zero, zero}, {zero, zero}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
  EXPECT_TRUE(c[1][0].is_zero());
  return {c[0][0], c[0][1], c[1][1]};
}

}  // namespace

TEST(Ternion, FrozenArithmetic) {
  EXPECT_EQ(Ternion::of(F7, 1, 2, 3) + Ternion::of(F7, 4, 5, 6), Ternion::of(F7, 5, 0, 2));
  const Ternion u = Ternion::of(F3, 1, 1, 1);
  EXPECT_EQ(u * u, Ternion::of(F3, 1, 2, 1));
  EXPECT_EQ(Ternion::of(F7, 2, 5, 3).inverse(), Ternion::of(F7, 4, 5, 5));
  EXPECT_EQ(tern_neg(Ternion::of(F7, 1, 0, 6)), Ternion::of(F7, 6, 0, 1));
}

TEST(Ternion, MatrixUnits) {
  const Ternion e11 = Ternion::e11(F3), e12 = Ternion::e12(F3), e22 = Ternion::e22(F3);
  EXPECT_EQ(e11 * e12, e12);
  EXPECT_EQ(e12 * e22, e12);
  EXPECT_TRUE((e12 * e11).is_zero());
  EXPECT_TRUE((e22 * e12).is_zero());
  EXPECT_TRUE((e12 * e12).is_zero());
  EXPECT_EQ(e11 + e22, Ternion::identity(F3));
}

TEST(Ternion, NonUnitInverseThrows) {
  EXPECT_THROW(Ternion::of(F7, 0, 1, 1).inverse(), NonUnitError);
  EXPECT_THROW(tern_inv(Ternion::of(F7, 1, 1, 0)), NonUnitError);
}

TEST(Ternion, UnitCounts) {
  EXPECT_EQ(enumerate_units(FieldSpec::prime(2)).size(), 2u);
  EXPECT_EQ(enumerate_units(F3).size(), 12u);
  EXPECT_EQ(enumerate_units(FieldSpec::prime(5)).size(), 80u);
  EXPECT_EQ(enumerate_ternions(F3).size(), 27u);
  const auto all = enumerate_ternions(F3);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Ternion, UnitCriterionMatchesInverseSearch) {
  for (int p : {2, 3, 5}) {
    for (const auto& t : enumerate_ternions(FieldSpec::prime(p))) {
      EXPECT_EQ(t.is_unit(), oracle::ternion_has_inverse(t)) << t;
    }
  }
}

TEST(Ternion, Subrings) {
  EXPECT_EQ(subring_class(Ternion::of(F7, 2, 0, 2)), (SubringClass{true, true, true, false}));
  EXPECT_EQ(subring_class(Ternion::of(F7, 2, 1, 2)), (SubringClass{false, true, false, false}));
  EXPECT_EQ(subring_class(Ternion::of(F7, 1, 0, 2)), (SubringClass{false, false, true, false}));
  EXPECT_EQ(subring_class(Ternion::of(F7, 0, 3, 0)), (SubringClass{false, true, false, true}));
  EXPECT_EQ(embed_scalar(Scalar(F7, 4)), Ternion::of(F7, 4, 0, 4));
}

TEST(TernionProperties, RingAxiomsOverSeveralFields) {
  gen::Gen g;
  for (const FieldSpec& f : {FieldSpec::prime(2), F7, FieldSpec::prime(65537), FieldSpec::rational()}) {
    const Ternion one = Ternion::identity(f);
    for (int n = 0; n < 300; ++n) {
      const Ternion a = g.ternion(f), b = g.ternion(f), c = g.ternion(f);
      ASSERT_EQ(a * b, matrix_product(a, b));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a + b) * c, a * c + b * c);
      ASSERT_EQ(one * a, a);
      ASSERT_EQ(a * one, a);
      if (a.is_unit()) {
        ASSERT_EQ(a * a.inverse(), one);
        ASSERT_EQ(a.inverse() * a, one);
      }
    }
  }
}

TEST(TernionProperties, RadicalIsATwoSidedIdeal) {
  gen::Gen g;
  for (int n = 0; n < 300; ++n) {
    const Ternion r{Scalar::zero(F7), g.scalar(F7), Scalar::zero(F7)};
    const Ternion t = g.ternion(F7);
    EXPECT_TRUE(subring_class(t * r).radical);
    EXPECT_TRUE(subring_class(r * t).radical);
    EXPECT_TRUE((r * r).is_zero());
  }
}

TEST(TernionProperties, UnitsAreClosedUnderProducts) {
  gen::Gen g;
  for (int n = 0; n < 300; ++n) {
    const Ternion a = g.unit(F7), b = g.unit(F7);
    EXPECT_TRUE((a * b).is_unit());
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
  }
}
