#include <gtest/gtest.h>

#include "eiq/field.hpp"
#include "eiq/random_category.hpp"

using namespace eiq;

TEST(PrimeField, ArithmeticAndInverses) {
  const PrimeField f(13);
  EXPECT_EQ(f.reduce(-1), 12);
  EXPECT_EQ(f.mul(7, 2), 1);
  for (Scalar a = 1; a < 13; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
  EXPECT_EQ(f.pow(2, 12), 1);
  EXPECT_THROW(PrimeField(12), Error);
}

TEST(PrimeField, IsPrime) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(421));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}

TEST(LinearAlgebra, RankNullspaceSolve) {
  const PrimeField f(13);
  MatrixFp m(2, 3);
  m << 1, 2, 3, 2, 4, 6;
  EXPECT_EQ(rank(m, f), 1);
  const MatrixFp ns = nullspace(m, f);
  EXPECT_EQ(ns.cols(), 2);
  EXPECT_TRUE(f.mul(m, ns).isZero());
  MatrixFp b(2, 1);
  b << 3, 6;
  const MatrixFp x = solve(m, b, f);
  EXPECT_EQ(f.mul(m, x), b);
  b << 3, 7;
  EXPECT_THROW(solve(m, b, f), Error);
}

TEST(LinearAlgebra, InverseOfRandomInvertibleMatrices) {
  const PrimeField f(31);
  Rng rng(5);
  for (Index n = 0; n <= 6; ++n) {
    const MatrixFp a = random_invertible(n, f, rng);
    EXPECT_EQ(f.mul(a, inverse(a, f)), MatrixFp::Identity(n, n));
  }
  MatrixFp singular = MatrixFp::Zero(2, 2);
  EXPECT_THROW(inverse(singular, f), Error);
}

TEST(LinearAlgebra, LeftInverseAndColumnBasis) {
  const PrimeField f(13);
  MatrixFp b(3, 2);
  b << 1, 0, 2, 1, 0, 5;
  EXPECT_EQ(f.mul(left_inverse(b, f), b), MatrixFp::Identity(2, 2));
  MatrixFp m(2, 3);
  m << 1, 2, 0, 0, 0, 1;
  EXPECT_EQ(column_basis(m, f).cols(), 2);
}

TEST(LinearAlgebra, CharacteristicPolynomialRoots) {
  const PrimeField f(13);
  MatrixFp m(2, 2);
  m << 2, 0, 0, 5;
  const auto roots = roots_in_field(characteristic_polynomial(m, f), f);
  EXPECT_EQ(roots, (std::vector<Scalar>{2, 5}));
}

TEST(LinearAlgebra, BlockHelpers) {
  MatrixFp a = MatrixFp::Identity(1, 1);
  MatrixFp b = MatrixFp::Constant(2, 2, 3);
  const MatrixFp d = block_diagonal({a, b});
  EXPECT_EQ(d.rows(), 3);
  EXPECT_EQ(d(0, 1), 0);
  EXPECT_EQ(d(2, 2), 3);
  const MatrixFp h = hconcat({b, b}, 2);
  EXPECT_EQ(h.cols(), 4);
}
