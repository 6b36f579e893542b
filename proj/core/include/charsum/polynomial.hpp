#pragma once

#include <string>
#include <vector>

#include "charsum/numeric.hpp"

namespace charsum {

/// Dense integer polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial x_pow_minus_one(unsigned k);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(unsigned i) const;

  BigInt evaluate(const BigInt& x) const;
  BigInt evaluate_mod(const BigInt& x, const BigInt& modulus) const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Exact division; the divisor must be monic and divide this exactly.
  IntPolynomial divide_exact(const IntPolynomial& monic_divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Phi_k(X), built as (X^k - 1) divided by Phi_e for every proper divisor e.
IntPolynomial cyclotomic_poly(unsigned k);

}  // namespace charsum
