#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "charsum/class_number.hpp"
#include "charsum/elma.hpp"
#include "charsum/errors.hpp"
#include "generators.hpp"

using namespace charsum;

namespace {

// h(-D) by counting reduced primitive forms ax^2+bxy+cy^2 of discriminant -D.
long reduced_form_count(long D) {
  long h = 0;
  for (long a = 1; 3 * a * a <= D; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      if ((b * b + D) % (4 * a) != 0) continue;
      const long c = (b * b + D) / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

}  // namespace

TEST(ClassNumber, OracleValuesD1) {
  const std::map<std::uint64_t, long> expected{{7, 1},   {23, 3},   {29, 8},   {31, 9},
                                               {37, 37}, {41, 121}, {43, 211}, {47, 695}};
  for (const auto& [p, h] : expected) {
    const auto rec = relative_class_number(PrimeContext::build(p), 1);
    EXPECT_EQ(rec.h_minus_int, h) << p;
    EXPECT_EQ(rec.w, 2 * p);
    EXPECT_LT(rec.integrality_residual, 1e-6);
  }
}

TEST(ClassNumber, OracleValuesSubfields) {
  struct Row {
    std::uint64_t p, d;
    long h;
  };
  const Row rows[] = {{7, 3, 1},  {11, 5, 1},  {31, 5, 9},  {31, 3, 3},
                      {61, 5, 1}, {13, 3, 1}, {43, 21, 1}, {47, 23, 5}};
  for (const auto& r : rows) {
    const auto rec = relative_class_number(PrimeContext::build(r.p), r.d);
    EXPECT_EQ(rec.h_minus_int, r.h) << r.p << " " << r.d;
    EXPECT_EQ(rec.w, 2u);
    EXPECT_LT(rec.integrality_residual, 1e-20);
    EXPECT_LT(rec.error_bound, 1e-60);
  }
}

TEST(ClassNumber, QuadraticMatchesReducedForms) {
  for (auto p : testgen::primes_in(7, 500)) {
    if (p % 4 != 3) continue;
    const auto ctx = PrimeContext::build(p);
    const long h = reduced_form_count(static_cast<long>(p));
    EXPECT_EQ(relative_class_number(ctx, (p - 1) / 2).h_minus_int, h) << p;
    const auto from_a = quadratic_class_number_from_a(ctx);
    ASSERT_TRUE(from_a);
    EXPECT_EQ(*from_a, h);
    EXPECT_TRUE(a_legendre_consistency(ctx).ok());
  }
  EXPECT_THROW((void)quadratic_class_number_from_a(PrimeContext::build(13)), Error);
}

TEST(ClassNumber, IntegralityAndBounds) {
  for (auto p : testgen::primes_in(3, 200)) {
    const auto rec = relative_class_number(PrimeContext::build(p), 1);
    EXPECT_GE(rec.h_minus_int, 1);
    EXPECT_LT(rec.integrality_residual, 1e-4);
    EXPECT_TRUE(rec.within_applicable_bounds()) << p;
  }
  for (const auto& [p, d] : testgen::valid_pairs(5, 2000)) {
    if ((p - 1) / d > 20) continue;
    const auto rec = relative_class_number(PrimeContext::build(p), d);
    EXPECT_LT(rec.integrality_residual, 1e-4) << p << " " << d;
    EXPECT_TRUE(rec.within_applicable_bounds()) << p << " " << d;
  }
}

TEST(ClassNumber, BoundApplicability) {
  const auto r23 = relative_class_number(PrimeContext::build(23), 1);
  ASSERT_NE(r23.bound("walum"), nullptr);
  EXPECT_TRUE(r23.bound("walum")->applicable);
  EXPECT_NEAR(static_cast<double>(r23.bound("walum")->value), 2 * 23 * std::pow(23.0 / 24, 5.5), 1e-9);
  EXPECT_FALSE(r23.bound("trivial")->applicable);

  const auto r7 = relative_class_number(PrimeContext::build(7), 3);
  EXPECT_TRUE(r7.bound("d3")->applicable);
  EXPECT_NEAR(static_cast<double>(r7.bound("d3")->value), 2 * std::sqrt(7.0 / 24), 1e-12);

  // 31 = (2^5-1)/(2-1) has a = 2 only; the d5 bound needs a <= -2.
  const auto r31 = relative_class_number(PrimeContext::build(31), 5);
  EXPECT_FALSE(r31.bound("d5")->applicable);
  EXPECT_GT(HighFloat(r31.h_minus_int), r31.bound("d5")->value);
  // 11 = ((-2)^5-1)/(-2-1).
  const auto r11 = relative_class_number(PrimeContext::build(11), 5);
  EXPECT_TRUE(r11.bound("d5")->applicable);
  EXPECT_TRUE(r11.within_applicable_bounds());
}

TEST(ClassNumber, PrecisionBudget) {
  try {
    (void)relative_class_number(PrimeContext::build(1009), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PrecisionBudgetExceeded);
  }
  EXPECT_THROW((void)relative_class_number(PrimeContext::build(13), 2), Error);
}
