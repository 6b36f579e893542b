#pragma once

#include <cstdint>
#include <optional>

#include "charsum/characters.hpp"
#include "charsum/report.hpp"

namespace charsum {

/// |L(1,chi)|^2 from the partial-sum identity
///   sum_{k=1}^{p-1} |S(k,chi)|^2 = (p^2-1)/12 + (p^2/pi^2) |L(1,chi)|^2
/// valid for odd nontrivial chi mod prime p.
double l1_abs_sq_parseval(const Character& chi);

/// |L(1,chi)|^2 = (pi^2/p) |L(0,chi)|^2 with L(0,chi) = -(1/p) sum l chi(l).
double l1_abs_sq_via_L0(const Character& chi);

/// sum_{k=1}^{p-1} |S(k,chi)|^2, compensated.
double partial_sum_energy(const Character& chi);

struct LValueRecord {
  std::uint64_t p = 0;
  std::uint64_t exponent = 0;
  double abs_sq_parseval = 0.0;
  double abs_sq_via_L0 = 0.0;
  double residual = 0.0;
};

LValueRecord l_value_record(const Character& chi);

/// Checks the full partial-sum identity for either parity; the trivial
/// character is reported as skipped.
VerificationReport parseval_identity_check(const Character& chi, double tolerance = 1e-9);

enum class MeanSquareRoute { Definition, FromA };

struct MeanSquareRecord {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t d = 0;
  double value = 0.0;
  MeanSquareRoute route = MeanSquareRoute::Definition;
};

/// M(p,m) = (2/m) sum_{j=1}^{m/2} |L(1, chi^{2j-1})|^2 for the order-m odd
/// character of character_of_order(). When base_exponent is given, that
/// character (which must be odd of order m) is used instead.
MeanSquareRecord mean_square(const PrimeContext& ctx, std::uint64_t m,
                             std::optional<std::uint64_t> base_exponent = std::nullopt);

/// (log p + 2 + gamma - log pi)^2 / 4.
double mean_square_upper_bound(std::uint64_t p);
/// d (pi^2/6)(1 - 1/p)(1 - 2/p): M(p,m) is at most d times Walum's value.
double mean_square_trivial_bound(std::uint64_t p, std::uint64_t d);
/// (pi^2/6)(1 - 1/p)(1 - 2/p).
double walum_mean_square(std::uint64_t p);

}  // namespace charsum
