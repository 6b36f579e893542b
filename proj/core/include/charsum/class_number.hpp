#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "charsum/modular.hpp"
#include "charsum/report.hpp"

namespace charsum {

/// ~100 significant decimal digits.
using HighFloat = boost::multiprecision::cpp_bin_float_100;

/// Largest h^- (in decimal digits) the HighFloat product can still round
/// to an integer with margin.
inline constexpr double kClassNumberDigitBudget = 80.0;

struct BoundValue {
  std::string name;
  HighFloat value;
  bool applicable = false;
  std::string note;
};

struct ClassNumberRecord {
  std::uint64_t p = 0;
  std::uint64_t d = 0;
  std::uint64_t m = 0;
  std::uint64_t w = 0;
  HighFloat h_minus;               // product value
  BigInt h_minus_int;              // nearest integer
  double integrality_residual = 0; // |h_minus - h_minus_int|
  double error_bound = 0;          // propagated rounding bound on h_minus
  std::vector<BoundValue> bounds;

  const BoundValue* bound(const std::string& name) const;
  /// h_minus_int <= value for every applicable bound (a relative slack of
  /// 1e-30 absorbs the m = 2 equality case of the AM-GM form).
  bool within_applicable_bounds() const;
};

/// h^-_{p,d} = w prod_{j=1}^{m/2} (sqrt(p)/(2 pi)) |L(1, chi^{2j-1})|, each
/// factor computed as |sum_l l chi(l)| / (2p) from exact integer bucket
/// sums and HighFloat roots of unity. Throws PrecisionBudgetExceeded when
/// h^- would have more than kClassNumberDigitBudget digits.
ClassNumberRecord relative_class_number(const PrimeContext& ctx, std::uint64_t d);

/// Fills record.bounds; requires h_minus and the factor data from
/// relative_class_number.
std::vector<BoundValue> bound_suite(const PrimeContext& ctx, std::uint64_t d, const HighFloat& mean_sq_factor);

/// h(Q(sqrt(-p))) recovered from the exact A(p,(p-1)/2), p = 3 mod 4,
/// p > 3. Empty when the recovered h^2 is not a perfect square.
std::optional<BigInt> quadratic_class_number_from_a(const PrimeContext& ctx);

/// Recovers h from A(p,(p-1)/2) and compares with relative_class_number.
VerificationReport a_legendre_consistency(const PrimeContext& ctx);

}  // namespace charsum
