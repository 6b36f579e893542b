#include "charsum/polynomial.hpp"

#include <sstream>

#include "charsum/errors.hpp"
#include "charsum/modular.hpp"

namespace charsum {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_pow_minus_one(unsigned k) {
  std::vector<BigInt> c(k + 1, BigInt(0));
  c[0] = -1;
  c[k] += 1;
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coefficient(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntPolynomial::evaluate_mod(const BigInt& x, const BigInt& modulus) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc * x + *it) % modulus;
  if (acc < 0) acc += modulus;
  return acc;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.coeffs_.back() != 1) {
    throw Error(ErrorKind::BadParameters, "divide_exact needs a monic divisor");
  }
  if (is_zero()) return {};
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() - 1 < dd) throw Error(ErrorKind::BadParameters, "divisor degree too large");
  std::vector<BigInt> quot(rem.size() - dd, BigInt(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigInt lead = rem[i + dd];
    quot[i] = lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= lead * divisor.coeffs_[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw Error(ErrorKind::BadParameters, "polynomial division is not exact");
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

IntPolynomial cyclotomic_poly(unsigned k) {
  if (k == 0) throw Error(ErrorKind::BadParameters, "cyclotomic index must be >= 1");
  IntPolynomial result = IntPolynomial::x_pow_minus_one(k);
  for (std::uint64_t e : divisors(k)) {
    if (e == k) continue;
    result = result.divide_exact(cyclotomic_poly(static_cast<unsigned>(e)));
  }
  return result;
}

}  // namespace charsum
