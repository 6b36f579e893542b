#include <cmath>

#include <gtest/gtest.h>

#include "charsum/elma.hpp"
#include "charsum/errors.hpp"
#include "charsum/lvalues.hpp"
#include "generators.hpp"

using namespace charsum;

namespace {

ExactRational q(long n, long d) { return ExactRational(BigInt(n), BigInt(d)); }
const double kPiD = std::acos(-1.0);

}  // namespace

TEST(Elma, OracleValues) {
  struct Row {
    std::uint64_t p, d;
    long num, den;
  };
  // Independent brute-force oracle (tests/oracles/oracle.py).
  const Row rows[] = {{7, 3, 17, 2},    {13, 1, 13, 2},    {11, 5, 203, 10},  {13, 3, 31, 2},
                      {31, 5, 1813, 30}, {31, 3, 73, 2}, {23, 11, 2023, 22}};
  for (const auto& r : rows) {
    const auto ctx = PrimeContext::build(r.p);
    EXPECT_EQ(a_sum_definition(ctx, r.d), q(r.num, r.den)) << r.p << " " << r.d;
    EXPECT_EQ(a_sum_bruteforce(ctx, r.d), q(r.num, r.den));
    EXPECT_EQ(a_sum_min_formula(ctx, r.d), q(r.num, r.den));
    EXPECT_NEAR(a_sum_orthogonality(ctx, r.d), static_cast<double>(r.num) / r.den, 1e-9);
  }
}

TEST(Elma, InvalidPairs) {
  const auto ctx = PrimeContext::build(13);
  for (std::uint64_t d : {2u, 5u, 13u}) {
    try {
      (void)a_sum_definition(ctx, d);
      FAIL() << d;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BadParameters);
    }
  }
  const auto c101 = PrimeContext::build(101);
  EXPECT_THROW((void)a_sum_bruteforce(c101, 1), Error);
}

TEST(Elma, BruteForceAgreesEverywhereSmall) {
  for (const auto& [p, d] : testgen::valid_pairs(5, 73)) {
    const auto ctx = PrimeContext::build(p);
    EXPECT_EQ(a_sum_bruteforce(ctx, d), a_sum_definition(ctx, d)) << p << " " << d;
  }
}

TEST(Elma, RoutesAndSandwich) {
  testgen::Gen gen(7);
  for (int trial = 0; trial < 80; ++trial) {
    const auto [p, d] = gen.elma_pair(5, 2000);
    const auto ctx = PrimeContext::build(p);
    const auto rec = elma_record(ctx, d);
    EXPECT_EQ(rec.value_definition, rec.value_min_formula);
    EXPECT_NEAR(rec.value_orthogonality, to_double(rec.value_definition), 1e-6);
    EXPECT_LE(elma_lower_bound(p, d), rec.value_definition);
    EXPECT_LE(rec.value_definition, elma_upper_bound(p, d));
    if (d >= 3) EXPECT_EQ(a_sum_fd_form(ctx, d), rec.value_definition);
  }
}

TEST(Elma, TripleRouteAllPairsTo2000) {
  for (const auto& [p, d] : testgen::valid_pairs(5, 2000)) {
    const auto ctx = PrimeContext::build(p);
    const auto def = a_sum_definition(ctx, d);
    ASSERT_EQ(a_sum_min_formula(ctx, d), def) << p << " " << d;
    ASSERT_NEAR(a_sum_orthogonality(ctx, d), to_double(def), 1e-6) << p << " " << d;
    ASSERT_LE(elma_lower_bound(p, d), def);
    ASSERT_LE(def, elma_upper_bound(p, d));
  }
}

TEST(Elma, ClosedFormsD1D3) {
  for (auto p : testgen::primes_in(5, 400)) {
    const auto ctx = PrimeContext::build(p);
    EXPECT_EQ(a_sum_definition(ctx, 1), ExactRational(BigInt(p), BigInt(2)));
    if (p % 6 == 1) {
      EXPECT_EQ(6 * a_sum_definition(ctx, 3) - BigInt(7 * p), ExactRational(2));
      EXPECT_EQ(elma_closed_form(p, 3)->value, a_sum_definition(ctx, 3));
    }
  }
}

TEST(Elma, MeanSquareBridge) {
  EXPECT_NEAR(mean_square_from_a(7, 1, q(7, 2)), 5 * kPiD * kPiD / 49, 1e-12);
  EXPECT_NEAR(mean_square_from_a(7, 3, q(17, 2)), kPiD * kPiD / 7, 1e-12);
  testgen::Gen gen(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [p, d] = gen.elma_pair(5, 1500);
    const auto ctx = PrimeContext::build(p);
    const auto a = a_sum_definition(ctx, d);
    const double msq = mean_square_from_a(p, d, a);
    EXPECT_LT(relative_residual(msq, mean_square(ctx, (p - 1) / d).value), 1e-8) << p << " " << d;
    EXPECT_LT(relative_residual(a_from_mean_square(p, d, msq), to_double(a)), 1e-12);
  }
}

TEST(Elma, SpecialFamily) {
  const auto s25 = closed_form_special(2, 5);
  ASSERT_TRUE(s25);
  EXPECT_EQ(s25->p, 31u);
  EXPECT_EQ(s25->a_value, q(1813, 30));
  const auto sm25 = closed_form_special(-2, 5);
  ASSERT_TRUE(sm25);
  EXPECT_EQ(sm25->p, 11u);
  EXPECT_NEAR(sm25->mean_square, kPiD * kPiD / 11, 1e-12);
  const auto s33 = closed_form_special(3, 3);
  ASSERT_TRUE(s33);
  EXPECT_EQ(s33->p, 13u);
  EXPECT_EQ(s33->a_value, q(31, 2));
  EXPECT_FALSE(closed_form_special(4, 3));  // 21 is composite
  EXPECT_FALSE(closed_form_special(1, 3));
  EXPECT_EQ(special_family_parameters(31, 5), (std::vector<std::int64_t>{2}));
}

TEST(Elma, SpecialFamilyAgainstBruteForce) {
  for (std::int64_t a = -12; a <= 12; ++a) {
    for (std::uint64_t d : {3u, 5u, 7u}) {
      const auto s = closed_form_special(a, d);
      if (!s || s->p > 20000) continue;
      const auto ctx = PrimeContext::build(s->p);
      EXPECT_EQ(a_sum_definition(ctx, d), s->a_value) << a << " " << d;
      EXPECT_LT(relative_residual(mean_square(ctx, (s->p - 1) / d).value, s->mean_square), 1e-8);
    }
  }
}

TEST(Elma, LargeDTrend) {
  // A(p,(p-1)/2) / (dp/3) - 1 stays below C log^2 p / d; C recorded at 1.
  for (auto p : testgen::primes_in(7, 2000)) {
    if (p % 4 != 3) continue;
    const std::uint64_t d = (p - 1) / 2;
    const auto ctx = PrimeContext::build(p);
    const double ratio = to_double(a_sum_definition(ctx, d)) / (static_cast<double>(d * p) / 3.0);
    const double lp = std::log(static_cast<double>(p));
    EXPECT_GE(ratio, 1.0);
    EXPECT_LE(ratio, 1.0 + lp * lp / static_cast<double>(d)) << p;
  }
}
