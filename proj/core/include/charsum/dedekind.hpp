#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charsum/numeric.hpp"
#include "charsum/report.hpp"

namespace charsum {

/// s(c,d) = sum_{n=1}^{d-1} ((n/d)) ((nc/d)) for a positive modulus d >= 2,
/// evaluated in O(log d) by the reciprocity law.
ExactRational dedekind_sum(std::int64_t c, std::int64_t d);

/// Same value from the O(d) sawtooth sum; reference implementation.
ExactRational dedekind_sum_sawtooth(std::int64_t c, std::int64_t d);

/// (c^2 + d^2 - 3cd + 1) / (12cd).
ExactRational reciprocity_rhs(std::int64_t c, std::int64_t d);

/// s(c,d) + s(d,c) against reciprocity_rhs, both sides exact.
VerificationReport reciprocity_check(std::int64_t c, std::int64_t d);

/// Telescoping evaluation of M(p,(p-1)/d) at p = (a^d-1)/(a-1), a >= 2:
///   N = 24 sum_{k=1}^{l} s(a^k, p) - 3 + 2/p,  l = (d-1)/2,
/// cross-checked against N = 2a(a+1)^2 Q_l(a^2) - 1.
struct ChainRecord {
  std::int64_t a = 0;
  std::uint64_t d = 0;
  std::uint64_t p = 0;
  std::vector<ExactRational> terms;
  ExactRational n_from_sums;
  BigInt n_closed;
  bool consistent = false;
  double mean_square = 0.0;  // (pi^2/6)(1 + N/p)
};

/// Empty unless a >= 2, d an odd prime, and p prime with p = 1 mod 2d.
std::optional<ChainRecord> chain_evaluate(std::int64_t a, std::uint64_t d);

}  // namespace charsum
