#include <gtest/gtest.h>

#include "generators.hpp"
#include "ternions/errors.hpp"
#include "ternions/linalg.hpp"
#include "ternions/polynomial.hpp"

using namespace ternions;
using linalg::Matrix;
using linalg::Row;

namespace {

Matrix ints(const FieldSpec& f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  Matrix m;
  for (const auto& r : rows) {
    Row row;
    for (auto x : r) row.emplace_back(f, x);
    m.push_back(std::move(row));
  }
  return m;
}

// Cofactor expansion along the first row.
Scalar laplace(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Scalar total = Scalar::zero(m[0][0].field());
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      Row row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Scalar term = m[0][c] * laplace(minor);
    total = c % 2 == 0 ? total + term : total - term;
  }
  return total;
}

}  // namespace

TEST(Linalg, RrefDropsZeroRowsAndNormalizesPivots) {
  const FieldSpec f = FieldSpec::prime(5);
  const Matrix r = linalg::rref(ints(f, {{0, 2, 4}, {0, 0, 0}, {0, 1, 2}, {3, 0, 1}}));
  EXPECT_EQ(r, ints(f, {{1, 0, 2}, {0, 1, 2}}));
  EXPECT_EQ(linalg::rank(ints(f, {{1, 2}, {2, 4}})), 1u);
}

TEST(Linalg, RankDependsOnCharacteristic) {
  const auto m = {std::initializer_list<std::int64_t>{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  EXPECT_EQ(linalg::rank(ints(FieldSpec::prime(2), m)), 2u);
  EXPECT_EQ(linalg::rank(ints(FieldSpec::prime(3), m)), 3u);
  EXPECT_EQ(linalg::rank(ints(FieldSpec::rational(), m)), 3u);
}

TEST(Linalg, DeterminantMatchesCofactorExpansion) {
  gen::Gen g;
  for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::prime(7), FieldSpec::rational()}) {
    for (int n = 0; n < 100; ++n) {
      const std::size_t size = static_cast<std::size_t>(g.integer(1, 4));
      Matrix m(size, Row(size, Scalar::zero(f)));
      for (auto& row : m)
        for (auto& x : row) x = g.sparse_scalar(f);
      EXPECT_EQ(linalg::determinant(m), laplace(m));
      EXPECT_EQ(linalg::rank(m) == size, !laplace(m).is_zero());
    }
  }
  EXPECT_THROW(linalg::determinant({}), UsageError);
}

TEST(Linalg, InSpan) {
  const FieldSpec f = FieldSpec::prime(3);
  const Matrix rows = ints(f, {{1, 0, 1}, {0, 1, 1}});
  EXPECT_TRUE(linalg::in_span(rows, ints(f, {{1, 1, 2}})[0]));
  EXPECT_FALSE(linalg::in_span(rows, ints(f, {{0, 0, 1}})[0]));
}

TEST(Polynomial, EvaluateAndDerive) {
  const FieldSpec f = FieldSpec::prime(7);
  // 3 x0^2 x1 - 2 x1 + 5
  const Polynomial p(2, {{3, {2, 1}}, {-2, {0, 1}}, {5, {0, 0}}});
  const std::array<Scalar, 2> at{Scalar(f, 2), Scalar(f, 3)};
  EXPECT_EQ(p.evaluate(at), Scalar(f, 3 * 4 * 3 - 6 + 5));
  // d/dx0 = 6 x0 x1, d/dx1 = 3 x0^2 - 2
  EXPECT_EQ(p.derivative(0).evaluate(at), Scalar(f, 36));
  EXPECT_EQ(p.derivative(1).evaluate(at), Scalar(f, 10));
}

TEST(Polynomial, DerivativeIsFormalInCharacteristicTwo) {
  const Polynomial square = Polynomial::quadratic_term(1, 1, 0, 0);
  const std::array<Scalar, 1> one{Scalar::one(FieldSpec::prime(2))};
  EXPECT_TRUE(square.derivative(0).evaluate(one).is_zero());
  const std::array<Scalar, 1> one3{Scalar::one(FieldSpec::prime(3))};
  EXPECT_EQ(square.derivative(0).evaluate(one3), Scalar(FieldSpec::prime(3), 2));
}

TEST(Polynomial, ArityChecks) {
  EXPECT_THROW(Polynomial(2, {{1, {1}}}), UsageError);
  const Polynomial p = Polynomial::quadratic_term(2, 1, 0, 1);
  EXPECT_THROW(p.derivative(2), UsageError);
  const std::array<Scalar, 1> wrong{Scalar::one(FieldSpec::prime(2))};
  EXPECT_THROW(p.evaluate(wrong), UsageError);
  EXPECT_THROW(p + Polynomial::quadratic_term(3, 1, 0, 1), UsageError);
}
