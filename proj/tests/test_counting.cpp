#include <gtest/gtest.h>

#include <map>

#include "bpart/counting.hpp"
#include "oracle.hpp"

using namespace bpart;

TEST(Stirling, Values) {
  for (std::size_t k = 0; k <= 12; ++k) EXPECT_EQ(stirling2(k, k), 1);
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(4, 0), 0);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(2, 5), 0);
}

// Independent route: S(k,j) = (1/j!) sum_i (-1)^i C(j,i) (j-i)^k.
TEST(Stirling, ExplicitFormula) {
  for (std::size_t k = 0; k <= 25; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      BigInt sum = 0;
      for (std::size_t i = 0; i <= j; ++i) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), j - i, k);
        BigInt term = binomial(j, i) * power;
        if (i % 2) sum -= term; else sum += term;
      }
      EXPECT_EQ(stirling2(k, j), sum / factorial(j)) << k << " " << j;
    }
  }
}

TEST(TotalCount, Values) {
  EXPECT_EQ(total_count(0), 1);
  EXPECT_EQ(total_count(2), 3);
  EXPECT_EQ(total_count(3), 11);
  EXPECT_EQ(total_count(4), 49);
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(total_count(static_cast<std::size_t>(n)),
              static_cast<unsigned long>(bpart::testing::brute_force_vn(n).size()));
}

TEST(SingletonFree, InclusionExclusion) {
  EXPECT_EQ(singleton_free_ie(0), 1);
  EXPECT_EQ(singleton_free_ie(1), 0);
  EXPECT_EQ(singleton_free_ie(2), 2);
  EXPECT_EQ(singleton_free_ie(3), 4);
  EXPECT_EQ(singleton_free_ie(4), 20);
}

// Coefficients of exp(sinh(x)e^x - x), expanded independently with sympy.
TEST(SingletonFree, GeneratingFunction) {
  const std::vector<long> expected{1,      0,       2,        4,         20,         96,          552,        3536,
                                   25104,  194816,  1637408,  14792768,  142761280,  1464117760,  15886137984};
  const auto egf = singleton_free_egf(14);
  ASSERT_EQ(egf.size(), expected.size());
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(egf[n], BigInt(expected[n])) << n;

  const auto long_run = singleton_free_egf(30);
  for (std::size_t n = 0; n <= 30; ++n) EXPECT_EQ(long_run[n], singleton_free_ie(n)) << n;
}

TEST(RationalSeries, ExponentOfSinhTimesExp) {
  const auto f = singleton_free_exponent(6);
  EXPECT_EQ(f[0], 0);
  EXPECT_EQ(f[1], 0);
  EXPECT_EQ(f[2], 1);
  // Same series via the product sinh(x) * e^x.
  auto e = RationalSeries::exponential(6);
  auto em = RationalSeries::exponential(6, -1);
  auto sinh = (e - em) * BigRational(1, 2);
  auto product = sinh * e;
  product[1] -= 1;
  EXPECT_EQ(product, f);
}

TEST(RationalSeries, ExpInvertsLog) {
  // exp(x) from the recurrence equals the exponential series.
  RationalSeries x(10);
  x[1] = 1;
  EXPECT_EQ(x.exp(), RationalSeries::exponential(10));
  RationalSeries c(3);
  c[0] = 1;
  EXPECT_THROW(c.exp(), std::domain_error);
  EXPECT_THROW(RationalSeries(3) + RationalSeries(4), std::invalid_argument);
}

namespace {

std::map<std::pair<std::size_t, std::size_t>, long> nonzero(const BivariateDistribution &d) {
  std::map<std::pair<std::size_t, std::size_t>, long> m;
  for (std::size_t s = 0; s <= d.n(); ++s)
    for (std::size_t a = 0; a <= d.n(); ++a)
      if (d.at(s, a) != 0) m[{s, a}] = d.at(s, a).get_si();
  return m;
}

}  // namespace

TEST(Distribution, PaperPolynomials) {
  using M = std::map<std::pair<std::size_t, std::size_t>, long>;
  EXPECT_EQ(nonzero(distribution(2)), (M{{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, 1}}));
  EXPECT_EQ(nonzero(distribution(3)), (M{{{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, 3}, {{1, 0}, 3}, {{0, 1}, 3}}));
  EXPECT_EQ(nonzero(distribution(4)), (M{{{4, 0}, 1},
                                         {{0, 4}, 1},
                                         {{2, 1}, 4},
                                         {{1, 2}, 4},
                                         {{2, 0}, 8},
                                         {{0, 2}, 8},
                                         {{1, 1}, 8},
                                         {{1, 0}, 4},
                                         {{0, 1}, 4},
                                         {{0, 0}, 7}}));
}

// Tabulated by brute force over all set partitions of [±n].
TEST(Distribution, BruteForceTables) {
  using M = std::map<std::pair<std::size_t, std::size_t>, long>;
  const M p5{{{0, 0}, 25}, {{0, 1}, 40}, {{0, 2}, 15}, {{0, 3}, 15}, {{0, 5}, 1}, {{1, 0}, 40}, {{1, 1}, 35},
             {{1, 2}, 20}, {{1, 3}, 5},  {{2, 0}, 15}, {{2, 1}, 20}, {{2, 2}, 5},  {{3, 0}, 15}, {{3, 1}, 5},
             {{5, 0}, 1}};
  const M p6{{{0, 0}, 150}, {{0, 1}, 198}, {{0, 2}, 141}, {{0, 3}, 38}, {{0, 4}, 24}, {{0, 6}, 1},  {{1, 0}, 198},
             {{1, 1}, 228}, {{1, 2}, 108}, {{1, 3}, 36},  {{1, 4}, 6},  {{2, 0}, 141}, {{2, 1}, 108}, {{2, 2}, 45},
             {{2, 3}, 6},   {{3, 0}, 38},  {{3, 1}, 36},  {{3, 2}, 6},  {{4, 0}, 24},  {{4, 1}, 6},   {{6, 0}, 1}};
  EXPECT_EQ(nonzero(distribution(5)), p5);
  EXPECT_EQ(nonzero(distribution(6)), p6);
  EXPECT_EQ(distribution(6), distribution(6, {12, 3}));
}

TEST(Distribution, Evaluation) {
  const auto d = distribution(4);
  EXPECT_EQ(d.total(), 49);
  EXPECT_EQ(d.evaluate(1, 1), 49);
  EXPECT_EQ(d.evaluate(0, 1), 20);
  EXPECT_EQ(d.evaluate(1, 0), 20);
  EXPECT_EQ(d.evaluate(0, 0), 7);
  EXPECT_TRUE(d.is_symmetric());
}

TEST(Distribution, Guard) {
  try {
    distribution(13);
    FAIL() << "expected TooLarge";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
  EXPECT_THROW(distribution(9, {8, 1}), Error);
  EXPECT_THROW(distribution(0), std::invalid_argument);
}

TEST(Distribution, SymmetryAndCountsUpToNine) {
  const auto egf = singleton_free_egf(9);
  for (int n = 1; n <= 9; ++n) {
    const auto d = distribution(n);
    const auto un = static_cast<std::size_t>(n);
    EXPECT_TRUE(d.is_symmetric()) << n;
    EXPECT_EQ(d.evaluate(0, 1), d.evaluate(1, 0)) << n;
    EXPECT_EQ(d.evaluate(0, 1), singleton_free_ie(un)) << n;
    EXPECT_EQ(d.evaluate(0, 1), egf[un]) << n;
    EXPECT_EQ(d.evaluate(1, 1), total_count(un)) << n;
  }
}
