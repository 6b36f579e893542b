#pragma once

#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

namespace charsum {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;
__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

inline constexpr long double kPi = 3.14159265358979323846264338327950288L;
inline constexpr long double kEulerGamma = 0.57721566490153286060651209008240243L;

/// Neumaier's variant of Kahan summation. Order of add() calls fixes the
/// result bit-for-bit.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

inline double to_double(const ExactRational& q) {
  return q.convert_to<double>();
}

inline ExactRational make_rational(const BigInt& num, const BigInt& den) {
  return ExactRational(num, den);
}

/// Relative residual |a-b| / max(|a|,|b|,floor).
inline double relative_residual(double a, double b, double floor = 1e-300) {
  const double scale = std::fmax(std::fmax(std::fabs(a), std::fabs(b)), floor);
  return std::fabs(a - b) / scale;
}

}  // namespace charsum
