#include <gtest/gtest.h>

#include <cmath>

#include "evtp/classify/generators.hpp"
#include "evtp/core/error.hpp"
#include "evtp/core/linalg.hpp"
#include "evtp/core/matrix.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace evtp;

TEST(Scalar, ParsesDecimalsExactly) {
  EXPECT_EQ(parse_rational("5.6"), Rational(28, 5));
  EXPECT_EQ(parse_rational("-9.584"), Rational(-1198, 125));
  EXPECT_EQ(parse_rational("1.25e-3"), Rational(1, 800));
  EXPECT_EQ(parse_rational(" 12 "), Rational(12));
  EXPECT_EQ(parse_rational("-7/21"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("+.5"), Rational(1, 2));
}

TEST(Scalar, RejectsBadTokens) {
  for (const char* t : {"", "abc", "1.2.3", "1/0", "1/", "/2", "--1", "1e", "0x10"})
    EXPECT_THROW(parse_rational(t), std::invalid_argument) << t;
}

TEST(Scalar, PrintsTerminatingDecimals) {
  EXPECT_EQ(to_string(Rational(134, 5)), "26.8");
  EXPECT_EQ(to_string(Rational(-1198, 125)), "-9.584");
  EXPECT_EQ(to_string(Rational(1, 3)), "1/3");
  EXPECT_EQ(to_string(Rational(-4)), "-4");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Scalar, DecimalRoundTrip) {
  Rng rng(11);
  std::uniform_int_distribution<int> num(-100000, 100000);
  std::uniform_int_distribution<int> exp(0, 6);
  for (int i = 0; i < 500; ++i) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, exp(rng));
    Rational v(num(rng), den);
    v.canonicalize();
    EXPECT_EQ(parse_rational(to_string(Rational(v))), v);
  }
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW(Matrix<double>::from_rows(std::vector<std::vector<double>>{{1, 2}, {3}}), DimensionError);
  EXPECT_THROW(Matrix<double>(0, 2), DimensionError);
  const auto a = Matrix<double>::from_rows({{1, 2, 3}, {4, 5, 6}});
  EXPECT_THROW(multiply(a, a), DimensionError);
  EXPECT_THROW(mat_pow(a, 2), DimensionError);
  EXPECT_THROW(det(a), DimensionError);
}

TEST(Matrix, PowersMatchRepeatedProducts) {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_integer_matrix(1 + t % 5, rng, -4, 4);
    for (unsigned k : {0u, 1u, 2u, 5u, 8u}) EXPECT_EQ(mat_pow(a, k), oracle::naive_power(a, k));
  }
}

TEST(Matrix, Example1Square) {
  EXPECT_EQ(mat_pow(fixtures::example1(), 2),
            Matrix<Rational>::from_rows({{120, 32, 34}, {43, 14, 14}, {124, 46, 54}}));
}

TEST(Matrix, PositiveMultiple) {
  const auto a = fixtures::example1();
  EXPECT_TRUE(positive_multiple(a, scaled(a, Rational(7, 3))));
  EXPECT_FALSE(positive_multiple(a, scaled(a, Rational(-1))));
  EXPECT_FALSE(positive_multiple(a, mat_pow(a, 2)));
  const auto d = Matrix<double>::from_rows({{1, -2}, {0, 3}});
  EXPECT_TRUE(positive_multiple(d, scaled(d, 0.5)));
}

TEST(Linalg, DeterminantMatchesLeibniz) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_integer_matrix(1 + t % 6, rng);
    const Rational expected = oracle::leibniz_det(a);
    EXPECT_EQ(det(a), expected);
    const double d = det(to_double(a));
    EXPECT_NEAR(d, expected.get_d(), 1e-9 * std::max(1.0, std::fabs(expected.get_d())));
  }
}

TEST(Linalg, FixtureDeterminants) {
  EXPECT_EQ(det(fixtures::example1()), Rational(54));
  EXPECT_EQ(det(fixtures::example2()), Rational(470));
  EXPECT_EQ(det(fixtures::example3()), parse_rational("3.3928"));
}

TEST(Linalg, InverseAndSolve) {
  Rng rng(8);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const auto a = random_integer_matrix(2 + t % 4, rng);
    if (oracle::leibniz_det(a) == 0) {
      EXPECT_THROW(inverse(a), SingularMatrixError);
      continue;
    }
    EXPECT_EQ(multiply(a, inverse(a)), Matrix<Rational>::identity(a.rows()));
    std::vector<Rational> b(a.rows());
    for (std::size_t i = 0; i < b.size(); ++i) {
      b[i] = Rational(static_cast<long>(i) - 2, 3);
      b[i].canonicalize();
    }
    const auto x = lu_solve(a, b);
    EXPECT_EQ(multiply(a, std::span<const Rational>(x)), b);
    ++checked;
  }
  EXPECT_GT(checked, 40);
}

TEST(Linalg, SingularMatrices) {
  const auto s = Matrix<Rational>::from_rows({{1, 2}, {2, 4}});
  EXPECT_EQ(det(s), 0);
  EXPECT_THROW(inverse(s), SingularMatrixError);
  EXPECT_THROW(inverse(to_double(s)), SingularMatrixError);
  try {
    inverse(Matrix<Rational>::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    FAIL();
  } catch (const SingularMatrixError& e) {
    EXPECT_EQ(e.pivot_index(), 2u);
  }
}
