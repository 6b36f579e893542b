#include <gtest/gtest.h>

#include "charsum/errors.hpp"
#include "charsum/modular.hpp"
#include "charsum/polynomial.hpp"
#include "generators.hpp"

using namespace charsum;

TEST(PrimeContext, SmallExamples) {
  const auto c7 = PrimeContext::build(7);
  EXPECT_EQ(c7.generator(), 3u);
  EXPECT_EQ(c7.ind(3), 1u);
  EXPECT_EQ(c7.ind(6), 3u);
  const auto c5 = PrimeContext::build(5);
  EXPECT_EQ(c5.generator(), 2u);
  EXPECT_EQ(c5.ind(4), 2u);
}

TEST(PrimeContext, Errors) {
  try {
    (void)PrimeContext::build(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
  try {
    (void)PrimeContext::build(10007, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
  EXPECT_THROW((void)PrimeContext::build(2), Error);
}

TEST(PrimeContext, IndexTableIsDiscreteLog) {
  for (auto p : testgen::primes_in(3, 200)) {
    const auto ctx = PrimeContext::build(p);
    std::vector<bool> seen(p - 1, false);
    for (std::uint64_t n = 1; n < p; ++n) {
      const auto k = ctx.ind(n);
      ASSERT_LT(k, p - 1);
      ASSERT_EQ(pow_mod(ctx.generator(), k, p), n) << "p=" << p << " n=" << n;
      ASSERT_FALSE(seen[k]);
      seen[k] = true;
    }
    EXPECT_EQ(ctx.ind(1), 0u);
    EXPECT_EQ(ctx.ind(p - 1), (p - 1) / 2);
  }
}

TEST(PrimeContext, LeastPrimitiveRoot) {
  for (auto p : testgen::primes_in(3, 300)) {
    const auto ctx = PrimeContext::build(p);
    EXPECT_EQ(ctx.order_of(ctx.generator()), p - 1);
    for (std::uint64_t g = 2; g < ctx.generator(); ++g) EXPECT_LT(ctx.order_of(g), p - 1);
  }
}

TEST(Arithmetic, EulerPhi) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(9), 6u);
  EXPECT_EQ(euler_phi(15), 8u);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), count) << n;
  }
}

TEST(Arithmetic, GammaD) {
  EXPECT_EQ(gamma_d(7), 6u);
  EXPECT_EQ(gamma_d(1), 1u);
  EXPECT_EQ(gamma_d(15), 8u);
  for (std::uint64_t d = 3; d <= 999; d += 2) {
    EXPECT_LE(gamma_d(d), d - 1);
    EXPECT_EQ(gamma_d(d) == d - 1, is_prime(d)) << d;
  }
}

TEST(Arithmetic, IsPrimeMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t k = 2; k * k <= n && prime; ++k) prime = n % k != 0;
    EXPECT_EQ(is_prime(n), prime) << n;
  }
  EXPECT_TRUE(is_prime(2305843009213693951ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));
}

TEST(Arithmetic, Divisors) {
  const auto ds = divisors(60);
  EXPECT_EQ(ds, (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60}));
}

TEST(QPoly, Examples) {
  EXPECT_EQ(q_poly_eval(1, 5), 0);
  EXPECT_EQ(q_poly_eval(2, 9), 1);
  EXPECT_EQ(q_poly_eval(3, 4), 6);
}

TEST(QPoly, DefiningIdentity) {
  for (unsigned l = 1; l <= 10; ++l) {
    for (int xi = -10; xi <= 10; ++xi) {
      if (xi == 1) continue;
      const BigInt x(xi);
      BigInt xl = 1;
      for (unsigned i = 0; i < l; ++i) xl *= x;
      EXPECT_EQ(q_poly_eval(l, x) * (x - 1) * (x - 1) + l * (x - 1) + 1, xl) << l << " " << xi;
      EXPECT_EQ(q_poly_eval_closed(l, x), q_poly_eval(l, x));
    }
  }
}

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(cyclotomic_poly(1), IntPolynomial({BigInt(-1), BigInt(1)}));
  EXPECT_EQ(cyclotomic_poly(3), IntPolynomial({BigInt(1), BigInt(1), BigInt(1)}));
  EXPECT_EQ(cyclotomic_poly(6), IntPolynomial({BigInt(1), BigInt(-1), BigInt(1)}));
}

TEST(Cyclotomic, ProductOverDivisors) {
  for (unsigned k = 1; k <= 30; ++k) {
    IntPolynomial prod({BigInt(1)});
    for (auto e : divisors(k)) prod = prod * cyclotomic_poly(static_cast<unsigned>(e));
    EXPECT_EQ(prod, IntPolynomial::x_pow_minus_one(k)) << k;
    EXPECT_EQ(static_cast<std::uint64_t>(cyclotomic_poly(k).degree()), euler_phi(k));
  }
}

TEST(Cyclotomic, VanishesAtElementsOfOrderK) {
  for (auto p : testgen::primes_in(3, 150)) {
    const auto ctx = PrimeContext::build(p);
    for (std::uint64_t n = 1; n < p; ++n) {
      const auto k = ctx.order_of(n);
      EXPECT_EQ(cyclotomic_poly(static_cast<unsigned>(k)).evaluate_mod(n, p), 0) << p << " " << n;
    }
  }
}
