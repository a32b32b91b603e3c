#include <gtest/gtest.h>

#include "evtp/classify/generators.hpp"
#include "evtp/core/linalg.hpp"
#include "evtp/exterior/compound.hpp"
#include "evtp/signs/oracles.hpp"
#include "evtp/signs/sign_pattern.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace evtp;

namespace {

std::vector<Rational> random_sign_vector(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<Rational> x(n);
  for (auto& v : x) v = d(rng);
  return x;
}

// Every signature with s_1 = +1; the first one that makes all s_i s_j a_ij
// positive (strict) or nonnegative (weak).
std::optional<std::vector<int>> brute_signature(const Matrix<Rational>& a, bool strict) {
  const std::size_t n = a.rows();
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    std::vector<int> s(n, 1);
    for (std::size_t i = 1; i < n; ++i) s[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        const int v = s[i] * s[j] * oracle::sgn(a(i, j));
        ok = strict ? v > 0 : v >= 0;
      }
    if (ok) return s;
  }
  return std::nullopt;
}

bool brute_all_minors(const Matrix<Rational>& a, bool strict) {
  for (std::size_t j = 1; j <= a.rows(); ++j) {
    const auto c = oracle::brute_compound(a, j);
    for (const auto& v : c.entries())
      if (strict ? v <= 0 : v < 0) return false;
  }
  return true;
}

bool brute_p_matrix(const Matrix<Rational>& a) {
  for (std::size_t j = 1; j <= a.rows(); ++j)
    for (const auto& s : oracle::subsets(a.rows(), j))
      if (oracle::brute_minor(a, s, s) <= 0) return false;
  return true;
}

// Mixed corpus: TP, STP, random integer, positive and checkerboarded matrices.
std::vector<Matrix<Rational>> corpus(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Matrix<Rational>> out;
  for (int t = 0; t < count; ++t) {
    const std::size_t n = 2 + t % 4;
    switch (t % 5) {
      case 0: out.push_back(random_tp(n, rng)); break;
      case 1: out.push_back(random_stp(n, rng)); break;
      case 2: out.push_back(random_integer_matrix(n, rng)); break;
      case 3: out.push_back(random_positive(n, rng)); break;
      default: out.push_back(random_tsa(n, rng)); break;
    }
  }
  return out;
}

}  // namespace

TEST(SignChanges, MatchBruteForce) {
  Rng rng(31);
  for (int t = 0; t < 400; ++t) {
    const auto x = random_sign_vector(1 + t % 8, rng);
    EXPECT_EQ(s_minus<Rational>(x), oracle::s_minus(x));
    EXPECT_EQ(s_plus<Rational>(x), oracle::s_plus(x));
    std::vector<double> xd;
    for (const auto& v : x) xd.push_back(v.get_d());
    EXPECT_EQ(s_minus<double>(xd), oracle::s_minus(x));
    EXPECT_EQ(s_plus<double>(xd), oracle::s_plus(x));
    EXPECT_LE(s_minus<Rational>(x), s_plus<Rational>(x));
  }
}

TEST(SignChanges, ZeroVectorAndTolerance) {
  const std::vector<double> z(5, 0.0);
  EXPECT_EQ(s_minus<double>(z), 0);
  EXPECT_EQ(s_plus<double>(z), 4);
  const std::vector<double> x{1.0, 1e-14, 1.0};
  EXPECT_EQ(s_plus<double>(x, 1e-12), 2);
  EXPECT_EQ(s_minus<double>(x, 1e-12), 0);
  EXPECT_EQ(s_plus<double>(x), 0);
}

TEST(SignPattern, ZeroToleranceIsRelative) {
  const auto a = Matrix<double>::from_rows({{100.0, 1e-9}, {-3.0, 0.0}});
  const auto p = sign_pattern(a, zero_tolerance_for(a, 1e-9));
  EXPECT_EQ(p(0, 0), 1);
  EXPECT_EQ(p(0, 1), 0);
  EXPECT_EQ(p(1, 0), -1);
  EXPECT_EQ(zero_tolerance_for(fixtures::example1()), 0.0);
}

TEST(SignPartition, CanonicalKeepsOneInJ) {
  const auto p = SignPartition::from_signature({-1, 1, -1, 1});
  const auto c = p.canonical();
  EXPECT_EQ(c.J, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(c.s, (std::vector<int>{1, -1, 1, -1}));
  EXPECT_EQ(SignPartition::full(3).J, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(DetectSjs, RecoversConjugatingSignature) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto inst = random_sign_conjugated_positive(2 + t % 5, rng);
    const auto part = detect_sjs(inst.matrix);
    ASSERT_TRUE(part);
    EXPECT_EQ(*part, inst.partition);
    EXPECT_TRUE(sign_pattern(signature_conjugate(inst.matrix, *part)).all_positive());
    EXPECT_EQ(detect_sjs(to_double(inst.matrix)), part);
  }
}

TEST(DetectSjs, AgreesWithSignatureEnumeration) {
  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_integer_matrix(2 + t % 4, rng, -3, 3);
    const auto strict = brute_signature(a, true);
    const auto sjs = detect_sjs(a);
    ASSERT_EQ(sjs.has_value(), strict.has_value());
    if (sjs) EXPECT_EQ(sjs->s, *strict);
    EXPECT_EQ(detect_js(a).has_value(), brute_signature(a, false).has_value());
  }
}

TEST(DetectSjs, Fixtures) {
  // The first fixture is positive; its second compound has negative entries at
  // positions no signature can explain.
  const auto a = fixtures::example1();
  EXPECT_EQ(detect_sjs(a), SignPartition::full(3));
  EXPECT_FALSE(detect_sjs(compound(a, 2)));
  const auto c3 = compound(fixtures::example3(), 3);
  ASSERT_TRUE(detect_sjs(c3));
  EXPECT_EQ(detect_sjs(c3)->J, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Involutions, CheckerboardAndSignatureConjugate) {
  Rng rng(14);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_integer_matrix(1 + t % 5, rng);
    EXPECT_EQ(checkerboard(checkerboard(a)), a);
    const auto p = SignPartition::from_signature(std::vector<int>(a.rows(), -1));
    EXPECT_EQ(signature_conjugate(a, p), a);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) EXPECT_EQ(checkerboard(a)(i, j), (i + j) % 2 ? -a(i, j) : a(i, j));
  }
}

TEST(TotalPositivity, MatchesBruteForce) {
  for (const auto& a : corpus(15, 150)) {
    EXPECT_EQ(is_tp(a).holds, brute_all_minors(a, false));
    EXPECT_EQ(is_stp(a).holds, brute_all_minors(a, true));
    EXPECT_EQ(is_tsa(a).holds, brute_all_minors(checkerboard(a), false));
  }
}

TEST(TotalPositivity, GeneratorsProduceTheirClass) {
  Rng rng(16);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + t % 5;
    EXPECT_TRUE(is_stp(random_stp(n, rng)));
    const auto tp = random_tp(n, rng);
    EXPECT_TRUE(is_tp(tp));
    EXPECT_NE(det(tp), 0);
    EXPECT_TRUE(is_tsa(random_tsa(n, rng)));
  }
}

TEST(TotalPositivity, WitnessIsAFailingMinor) {
  Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    const auto a = random_integer_matrix(3 + t % 2, rng);
    const auto r = is_stp(a);
    if (r.holds) continue;
    ASSERT_TRUE(r.witness);
    std::vector<std::size_t> rows, cols;
    for (auto i : r.witness->rows) rows.push_back(i - 1);
    for (auto i : r.witness->cols) cols.push_back(i - 1);
    const Rational m = oracle::brute_minor(a, rows, cols);
    EXPECT_LE(m, 0);
    EXPECT_DOUBLE_EQ(r.witness->value, m.get_d());
  }
}

TEST(TotalPositivity, InverseOfTpIsTsa) {
  Rng rng(18);
  for (int t = 0; t < 40; ++t) {
    const auto tp = random_tp(2 + t % 5, rng);
    EXPECT_TRUE(is_tsa(inverse(tp)));
    EXPECT_TRUE(is_tp(inverse(checkerboard(tp))));
  }
}

TEST(PMatrix, MatchesBruteForce) {
  for (const auto& a : corpus(19, 150)) EXPECT_EQ(is_p_matrix(a).holds, brute_p_matrix(a));
  Rng rng(20);
  for (int t = 0; t < 30; ++t) EXPECT_TRUE(is_p_matrix(random_m_matrix(2 + t % 5, rng)));
}

TEST(PMatrix, WitnessOrder) {
  const auto a = Matrix<Rational>::from_rows({{1, 2, 0}, {3, 1, 0}, {0, 0, -1}});
  const auto r = is_p_matrix(a);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness->order, 1u);
  EXPECT_EQ(r.witness->rows, (std::vector<std::size_t>{3}));
}

TEST(Monotone, MatchesCofactorInverse) {
  Rng rng(22);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 2 + t % 4;
    const auto a = t % 3 == 0 ? random_m_matrix(n, rng) : random_integer_matrix(n, rng, -2, 4);
    const Rational d = oracle::leibniz_det(a);
    bool expected = d != 0;
    for (std::size_t i = 0; i < n && expected; ++i)
      for (std::size_t j = 0; j < n && expected; ++j) {
        std::vector<std::size_t> rows, cols;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != j) rows.push_back(k);
          if (k != i) cols.push_back(k);
        }
        const Rational cof = ((i + j) % 2 ? -1 : 1) * oracle::brute_minor(a, rows, cols);
        expected = cof / d >= 0;
      }
    EXPECT_EQ(is_monotone(a), expected);
    EXPECT_EQ(is_monotone(to_double(a)), expected);
    if (t % 3 == 0) EXPECT_TRUE(expected);
  }
}

TEST(Oscillatory, TridiagonalBecomesStpAtSquare) {
  const auto a = Matrix<Rational>::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
  const auto r = is_oscillatory(a, 10);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.k, 2u);
  EXPECT_FALSE(is_stp(a));
  EXPECT_TRUE(is_stp(mat_pow(a, 2)));
  const auto f = is_oscillatory(to_double(a), 10);
  EXPECT_TRUE(f.holds);
  EXPECT_EQ(f.k, 2u);
}

TEST(Oscillatory, TpButNeverStp) {
  const auto id = Matrix<Rational>::identity(3);
  const auto r = is_oscillatory(id, 20);
  EXPECT_TRUE(r.tp.holds);
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(is_oscillatory(fixtures::example1(), 20).holds);
}

TEST(Stjs, Example3PartitionsAndBruteForce) {
  const auto a = fixtures::example3();
  const auto parts = detect_stjs(a);
  ASSERT_TRUE(parts);
  ASSERT_EQ(parts->size(), 4u);
  for (std::size_t j = 1; j <= 4; ++j) EXPECT_EQ((*parts)[j - 1], *detect_sjs(oracle::brute_compound(a, j)));
  EXPECT_EQ((*parts)[2].J, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_TRUE(detect_stjs(to_double(a)));
  EXPECT_FALSE(detect_stjs(fixtures::example1()));
}

TEST(Stjs, StpIsStjsWithFullPartitions) {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_stp(2 + t % 4, rng);
    const auto parts = detect_stjs(a);
    ASSERT_TRUE(parts);
    for (std::size_t j = 0; j < parts->size(); ++j) EXPECT_EQ((*parts)[j].J.size(), (*parts)[j].n);
  }
}
