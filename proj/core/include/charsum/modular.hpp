#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "charsum/numeric.hpp"

namespace charsum {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n) noexcept;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

/// Trial division; adequate for n < 2^62 at the sizes used here.
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// max over divisors k of d of phi(k).
std::uint64_t gamma_d(std::uint64_t d);

/// Integer polynomial X^{l-2} + 2X^{l-3} + ... + (l-1) evaluated at x
/// (zero for l = 1).
BigInt q_poly_eval(unsigned l, const BigInt& x);

/// (x^l - 1 - l(x-1)) / (x-1)^2, only defined for x != 1.
BigInt q_poly_eval_closed(unsigned l, const BigInt& x);

/// Default cap on p for context construction: 2^31, overridable through the
/// CHARSUM_MAX_P environment variable.
std::uint64_t default_max_prime();

/// Immutable description of F_p^*: least primitive root, dense discrete-log
/// table, and the divisor lattice of p-1. Safe to share across threads.
class PrimeContext {
 public:
  static PrimeContext build(std::uint64_t p);
  static PrimeContext build(std::uint64_t p, std::uint64_t max_p);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t group_order() const noexcept { return p_ - 1; }
  std::uint64_t generator() const noexcept { return g_; }

  /// ind(n) for n in 1..p-1 (n is reduced mod p first; n = 0 mod p throws).
  std::uint64_t ind(std::uint64_t n) const;
  /// g^k mod p.
  std::uint64_t power_of_generator(std::uint64_t k) const noexcept {
    return exp_[k % (p_ - 1)];
  }

  std::span<const std::uint32_t> index_table() const noexcept { return ind_; }
  std::span<const std::uint64_t> divisors_pm1() const noexcept { return divisors_; }
  std::span<const std::uint64_t> phi_pm1() const noexcept { return phi_; }

  /// e(k/(p-1)) for k in 0..p-2.
  const std::complex<double>& root(std::uint64_t k) const noexcept {
    return roots_[k % (p_ - 1)];
  }

  /// Multiplicative order of n mod p (n coprime to p).
  std::uint64_t order_of(std::uint64_t n) const;

 private:
  PrimeContext() = default;

  std::uint64_t p_ = 0;
  std::uint64_t g_ = 0;
  std::vector<std::uint32_t> ind_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint64_t> divisors_;
  std::vector<std::uint64_t> phi_;
  std::vector<std::complex<double>> roots_;
};

}  // namespace charsum
