#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "charsum/characters.hpp"
#include "charsum/errors.hpp"
#include "generators.hpp"

using namespace charsum;

TEST(Character, OfOrderExamples) {
  const auto c7 = PrimeContext::build(7);
  auto chi = character_of_order(c7, 6);
  EXPECT_EQ(chi.exponent(), 1u);
  EXPECT_TRUE(chi.is_odd());
  EXPECT_EQ(chi.order(), 6u);

  auto legendre = character_of_order(c7, 2);
  EXPECT_EQ(legendre.exponent(), 3u);
  EXPECT_EQ(legendre.order(), 2u);
  for (std::uint64_t n = 1; n < 7; ++n) {
    const double expected = pow_mod(n, 3, 7) == 1 ? 1.0 : -1.0;
    EXPECT_NEAR(legendre(n).real(), expected, 1e-12);
    EXPECT_NEAR(legendre(n).imag(), 0.0, 1e-12);
  }

  const auto c13 = PrimeContext::build(13);
  auto chi13 = character_of_order(c13, 4);
  EXPECT_EQ(chi13.exponent(), 3u);
  EXPECT_EQ(chi13.order(), 4u);
  EXPECT_TRUE(chi13.is_odd());
}

TEST(Character, OfOrderRejectsBadOrders) {
  const auto c13 = PrimeContext::build(13);
  for (std::uint64_t m : {5u, 3u, 6u, 24u}) {
    try {
      (void)character_of_order(c13, m);
      FAIL() << m;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BadOrder);
    }
  }
}

TEST(Character, MultiplicativityAndParity) {
  testgen::Gen gen(11);
  for (auto p : testgen::primes_in(3, 100)) {
    const auto ctx = PrimeContext::build(p);
    for (std::uint64_t j = 0; j < p - 1; ++j) {
      Character chi(ctx, j);
      EXPECT_EQ((p - 1) % chi.order(), 0u);
      EXPECT_NEAR(chi(p - 1).real(), chi.is_odd() ? -1.0 : 1.0, 1e-12);
      EXPECT_EQ(std::abs(chi(0)), 0.0);
    }
    for (int trial = 0; trial < 1000; ++trial) {
      Character chi(ctx, gen.uniform(0, p - 2));
      const auto a = gen.uniform(1, p - 1);
      const auto b = gen.uniform(1, p - 1);
      EXPECT_LT(std::abs(chi(a * b % p) - chi(a) * chi(b)), 1e-12);
    }
  }
}

TEST(Character, Orthogonality) {
  for (auto p : testgen::primes_in(3, 50)) {
    const auto ctx = PrimeContext::build(p);
    for (std::uint64_t a = 0; a < p - 1; ++a) {
      for (std::uint64_t b = 0; b < p - 1; ++b) {
        Character chi(ctx, a), psi(ctx, b);
        std::complex<double> s = 0;
        for (std::uint64_t n = 1; n < p; ++n) s += chi(n) * std::conj(psi(n));
        s /= static_cast<double>(p - 1);
        EXPECT_LT(std::abs(s - std::complex<double>(a == b ? 1.0 : 0.0)), 1e-12);
      }
    }
  }
}

TEST(PartialSums, Examples) {
  const auto c7 = PrimeContext::build(7);
  const auto prof = partial_sums(character_of_order(c7, 2));
  EXPECT_NEAR(prof.max_abs, 2.0, 1e-12);
  const auto c5 = PrimeContext::build(5);
  const auto p5 = partial_sums(Character(c5, 1));
  EXPECT_NEAR(std::abs(p5.sums[1]), 1.0, 1e-12);
  EXPECT_THROW((void)partial_sums(Character(c5, 0)), Error);
}

TEST(PartialSums, ProfileInvariants) {
  for (auto p : testgen::primes_in(3, 150)) {
    const auto ctx = PrimeContext::build(p);
    for (std::uint64_t j = 1; j < p - 1; ++j) {
      Character chi(ctx, j);
      const auto prof = partial_sums(chi);
      ASSERT_EQ(prof.sums.size(), p);
      EXPECT_LT(std::abs(prof.sums[p - 1]), 1e-9);
      for (const auto& s : prof.sums) EXPECT_LE(std::abs(s), prof.max_abs + 1e-12);
      EXPECT_NEAR(max_partial_sum(chi), prof.max_abs, 1e-9);
    }
  }
}

TEST(PartialSums, PolyaVinogradovConstantBounded) {
  // Empirical C_PV: max m(chi)/log p over p <= 2000 stays below 1.
  double c_pv = 0.0;
  for (auto p : testgen::primes_in(1900, 2000)) {
    const auto ctx = PrimeContext::build(p);
    for (std::uint64_t j = 1; j < p - 1; ++j) {
      c_pv = std::max(c_pv, normalized_max_partial_sum(Character(ctx, j)) / std::log(static_cast<double>(p)));
    }
  }
  EXPECT_GT(c_pv, 0.0);
  EXPECT_LT(c_pv, 1.0);
}

TEST(GaussSum, Modulus) {
  for (auto p : testgen::primes_in(3, 200)) {
    const auto ctx = PrimeContext::build(p);
    for (std::uint64_t j = 1; j < p - 1; ++j) {
      const auto tau = gauss_sum(Character(ctx, j));
      EXPECT_NEAR(std::norm(tau) / static_cast<double>(p), 1.0, 1e-9) << p << " " << j;
    }
  }
  const auto c7 = PrimeContext::build(7);
  const auto tau = gauss_sum(character_of_order(c7, 2));
  EXPECT_NEAR(tau.real(), 0.0, 1e-12);
  EXPECT_NEAR(tau.imag(), std::sqrt(7.0), 1e-12);
}

TEST(IndexWeightedSums, MatchDirectSum) {
  for (auto p : testgen::primes_in(3, 120)) {
    const auto ctx = PrimeContext::build(p);
    for (std::uint64_t j = 1; j < p - 1; ++j) {
      Character chi(ctx, j);
      const auto c = index_weighted_sums(chi);
      ASSERT_EQ(c.size(), chi.order());
      std::complex<double> direct = 0, via = 0;
      for (std::uint64_t l = 1; l < p; ++l) direct += static_cast<double>(l) * chi(l);
      const double two_pi = 2.0 * std::acos(-1.0);
      for (std::size_t r = 0; r < c.size(); ++r) {
        via += static_cast<double>(c[r]) * std::polar(1.0, two_pi * r / static_cast<double>(c.size()));
      }
      EXPECT_LT(std::abs(direct - via), 1e-8 * p * p);
    }
  }
}

TEST(KernelPartition, Examples) {
  const auto c7 = PrimeContext::build(7);
  const auto h1 = kernel_partition(Character(c7, 1));
  EXPECT_EQ(h1.elements, (std::vector<std::uint64_t>{1}));
  const auto h3 = kernel_partition(character_of_order(c7, 2));
  EXPECT_EQ(h3.elements, (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_EQ(h3.by_order.at(3), (std::vector<std::uint64_t>{2, 4}));
  const auto c31 = PrimeContext::build(31);
  EXPECT_EQ(kernel_partition(character_of_order(c31, 6)).by_order.at(5).size(), 4u);
}

TEST(KernelPartition, MatchesNumericalKernel) {
  for (auto p : testgen::primes_in(3, 200)) {
    const auto ctx = PrimeContext::build(p);
    for (std::uint64_t d : divisors(p - 1)) {
      Character chi(ctx, d);
      const auto part = kernel_partition(chi);
      std::vector<std::uint64_t> numeric;
      for (std::uint64_t n = 1; n < p; ++n) {
        if (std::abs(chi(n) - 1.0) < 1e-9) numeric.push_back(n);
      }
      EXPECT_EQ(part.elements, numeric);
      EXPECT_EQ(part.elements.size(), d);
      std::size_t total = 0;
      for (const auto& [k, els] : part.by_order) {
        EXPECT_EQ(d % k, 0u);
        EXPECT_EQ(els.size(), euler_phi(k));
        total += els.size();
      }
      EXPECT_EQ(total, d);
    }
  }
}
