#include <gtest/gtest.h>

#include <cmath>

#include "evtp/classify/generators.hpp"
#include "evtp/core/error.hpp"
#include "evtp/core/linalg.hpp"
#include "evtp/exterior/compound.hpp"
#include "evtp/exterior/compound_powers.hpp"
#include "evtp/exterior/index_set.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace evtp;

namespace {

std::uint64_t pascal(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    t[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0);
  }
  return k > n ? 0 : t[n][k];
}

}  // namespace

TEST(IndexSet, BinomialMatchesPascal) {
  for (std::size_t n = 0; n <= 30; ++n)
    for (std::size_t k = 0; k <= n + 2; ++k) EXPECT_EQ(binomial(n, k), pascal(n, k)) << n << " " << k;
}

TEST(IndexSet, RankUnrankBijection) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      const auto all = lex_subsets(n, j);
      const auto ref = oracle::subsets(n, j);
      ASSERT_EQ(all.size(), ref.size());
      for (std::size_t r = 0; r < all.size(); ++r) {
        EXPECT_EQ(all[r].rank, r);
        std::vector<std::size_t> one_based = ref[r];
        for (auto& e : one_based) ++e;
        EXPECT_EQ(all[r].elems, one_based);
        EXPECT_EQ(lex_unrank(r, n, j), one_based);
        EXPECT_EQ(lex_rank(one_based, n), r);
      }
    }
  }
}

TEST(IndexSet, RejectsBadInput) {
  EXPECT_THROW(lex_unrank(3, 3, 2), DimensionError);
  const std::vector<std::size_t> bad{2, 1};
  EXPECT_THROW(lex_rank(bad, 3), DimensionError);
  const std::vector<std::size_t> out{1, 4};
  EXPECT_THROW(lex_rank(out, 3), DimensionError);
}

TEST(Compound, Example1SecondCompound) {
  const auto a = fixtures::example1();
  const auto c2 = compound(a, 2);
  EXPECT_EQ(c2, Matrix<Rational>::from_rows({{14, 4, -2}, {26, 46, 4}, {-2, 11, 8}}));
  EXPECT_EQ(compound(a, 3), Matrix<Rational>::from_rows({{54}}));
  EXPECT_EQ(compound(a, 1), a);
  // Recomputed independently: entry (3,1) of the cube is 18400.
  const auto cube = mat_pow(c2, 3);
  EXPECT_EQ(cube, oracle::naive_power(oracle::brute_compound(a, 2), 3));
  EXPECT_EQ(cube, Matrix<Rational>::from_rows({{9980, 10936, 40}, {80264, 112156, 7264}, {18400, 29156, 2756}}));
  EXPECT_EQ(mat_pow(c2, 4), Matrix<Rational>::from_rows({{423976, 543416, 24104},
                                                         {4025224, 5560136, 346208},
                                                         {1010144, 1445092, 101872}}));
}

TEST(Compound, Example2SecondCompound) {
  EXPECT_EQ(compound(fixtures::example2(), 2),
            Matrix<Rational>::from_rows({{64, 20, 2}, {52, 75, 31}, {50, 45, 75}}));
}

TEST(Compound, Example3Compounds) {
  const auto a = fixtures::example3();
  EXPECT_EQ(compound(a, 2), fixtures::example3_compound2());
  EXPECT_EQ(compound(a, 3), fixtures::example3_compound3());
  EXPECT_EQ(compound(a, 4)(0, 0), parse_rational("3.3928"));
}

TEST(Compound, MatchesBruteForceMinors) {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 5;
    const auto a = random_integer_matrix(n, rng);
    for (std::size_t j = 1; j <= n; ++j) EXPECT_EQ(compound(a, j), oracle::brute_compound(a, j));
  }
}

TEST(Compound, RectangularMinor) {
  const auto a = Matrix<Rational>::from_rows({{1, 2, 3}, {4, 5, 6}});
  const std::vector<std::size_t> rows{1, 2};
  const std::vector<std::size_t> cols{1, 3};
  EXPECT_EQ(minor(a, rows, cols), Rational(-6));
  EXPECT_THROW(compound(a, 2), DimensionError);
}

TEST(Compound, OrderOutOfRange) {
  const auto a = fixtures::example1();
  EXPECT_THROW(compound(a, 0), DimensionError);
  EXPECT_THROW(compound(a, 4), DimensionError);
}

TEST(Compound, CauchyBinet) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_integer_matrix(4, rng);
    const auto b = random_integer_matrix(4, rng);
    for (std::size_t j = 1; j <= 4; ++j)
      EXPECT_EQ(compound(multiply(a, b), j), multiply(compound(a, j), compound(b, j)));
  }
}

TEST(Compound, JacobiInverseMinors) {
  Rng rng(2);
  int tested = 0;
  while (tested < 30) {
    const auto a = random_integer_matrix(4, rng);
    const Rational d = det(a);
    if (d == 0) continue;
    ++tested;
    const auto inv = inverse(a);
    for (std::size_t j = 1; j < 4; ++j) {
      const auto ci = compound(inv, j);
      const auto subs = oracle::subsets(4, j);
      for (std::size_t r = 0; r < subs.size(); ++r) {
        for (std::size_t s = 0; s < subs.size(); ++s) {
          std::vector<std::size_t> rc, sc;
          std::size_t parity = 0;
          for (std::size_t i = 0; i < 4; ++i) {
            if (std::find(subs[r].begin(), subs[r].end(), i) == subs[r].end()) rc.push_back(i);
            if (std::find(subs[s].begin(), subs[s].end(), i) == subs[s].end()) sc.push_back(i);
          }
          for (auto i : subs[r]) parity += i;
          for (auto i : subs[s]) parity += i;
          const Rational expected = (parity % 2 ? -1 : 1) * oracle::brute_minor(a, sc, rc) / d;
          EXPECT_EQ(ci(r, s), expected);
        }
      }
    }
  }
}

TEST(Exterior, CoordinatesAreMinorsOfStackedVectors) {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + t % 4;
    const std::size_t j = 1 + t % n;
    const auto m = random_integer_matrix(n, rng);
    std::vector<Vector<Rational>> xs;
    for (std::size_t c = 0; c < j; ++c) {
      const auto col = m.column(c);
      xs.emplace_back(col.begin(), col.end());
    }
    const auto w = exterior_product<Rational>(xs);
    const auto subs = oracle::subsets(n, j);
    std::vector<std::size_t> cols(j);
    std::iota(cols.begin(), cols.end(), 0);
    ASSERT_EQ(w.size(), subs.size());
    for (std::size_t r = 0; r < subs.size(); ++r) EXPECT_EQ(w[r], oracle::brute_minor(m, subs[r], cols));

    // (A x_1) ^ ... ^ (A x_j) = A^(j) (x_1 ^ ... ^ x_j)
    const auto a = random_integer_matrix(n, rng);
    std::vector<Vector<Rational>> ax;
    for (const auto& x : xs) ax.push_back(multiply(a, std::span<const Rational>(x)));
    EXPECT_EQ(exterior_product<Rational>(ax), multiply(compound(a, j), std::span<const Rational>(w)));
  }
}

TEST(Exterior, TensorProduct) {
  const std::vector<Rational> x{1, -2};
  const std::vector<Rational> y{3, 5};
  EXPECT_EQ(tensor_product<Rational>(x, y), Matrix<Rational>::from_rows({{3, 5}, {-6, -10}}));
  const std::vector<Rational> z{3, 0, 5};
  EXPECT_THROW(tensor_product<Rational>(x, z), DimensionError);
}

TEST(Exterior, KroneckerProductOfEigenvalues) {
  // Triangular input: eigenvalues of A^(j) are the j-fold products of the
  // diagonal, read off the diagonal of the (triangular) compound.
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    auto a = random_integer_matrix(4, rng);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < i; ++k) a(i, k) = 0;
    for (std::size_t j = 1; j <= 4; ++j) {
      const auto c = compound(a, j);
      const auto subs = oracle::subsets(4, j);
      for (std::size_t r = 0; r < subs.size(); ++r) {
        Rational prod = 1;
        for (auto i : subs[r]) prod *= a(i, i);
        EXPECT_EQ(c(r, r), prod);
        for (std::size_t s = 0; s < r; ++s) EXPECT_EQ(c(r, s), 0);
      }
    }
  }
}

TEST(CompoundPowers, TracksCompoundsOfPowers) {
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_integer_matrix(4, rng, -3, 5);
    const auto ad = to_double(a);
    CompoundPowerSequence<double> seq(ad);
    CompoundPowerSequence<Rational> exact(a);
    for (unsigned k = 1; k <= 12; ++k) {
      EXPECT_EQ(seq.power(), k);
      for (std::size_t j = 1; j <= 4; ++j) {
        const auto ref = compound(mat_pow(a, k), j);
        EXPECT_EQ(exact.current(j), ref);
        const double scale = max_abs(ref);
        if (scale == 0.0) continue;
        const double got_scale = max_abs(seq.current(j));
        for (std::size_t r = 0; r < ref.rows(); ++r)
          for (std::size_t s = 0; s < ref.cols(); ++s)
            EXPECT_NEAR(seq.current(j)(r, s) / got_scale, ref(r, s).get_d() / scale, 1e-12);
      }
      seq.advance();
      exact.advance();
    }
  }
}
