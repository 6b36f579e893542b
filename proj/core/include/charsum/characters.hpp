#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "charsum/modular.hpp"

namespace charsum {

/// Dirichlet character mod p, chi(g^k) = e(j k / (p-1)) for the context's
/// least primitive root g. Holds a non-owning pointer: the PrimeContext must
/// outlive every Character built from it.
class Character {
 public:
  Character(const PrimeContext& ctx, std::uint64_t exponent);

  const PrimeContext& context() const noexcept { return *ctx_; }
  std::uint64_t exponent() const noexcept { return j_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_odd() const noexcept { return (j_ & 1U) != 0; }
  bool is_trivial() const noexcept { return j_ == 0; }

  /// j * ind(n) mod (p-1); chi(n) = e(angle_index(n) / (p-1)).
  std::uint64_t angle_index(std::uint64_t n) const;

  /// chi(n), zero when p | n.
  std::complex<double> operator()(std::uint64_t n) const;

  Character power(std::uint64_t k) const;
  Character conjugate() const;

  friend bool operator==(const Character& a, const Character& b) noexcept {
    return a.ctx_ == b.ctx_ && a.j_ == b.j_;
  }

 private:
  const PrimeContext* ctx_;
  std::uint64_t j_;
  std::uint64_t order_;
};

/// The odd character of exact order m with exponent j = (p-1)/m.
/// Requires m even, m | p-1 and (p-1)/m odd.
Character character_of_order(const PrimeContext& ctx, std::uint64_t m);

/// S(k) = sum_{l=0}^{k} chi(l) for k = 0..p-1, plus the maximum |S| and its
/// normalisation by e^gamma sqrt(p) / pi.
struct PartialSumProfile {
  std::uint64_t exponent = 0;
  std::vector<std::complex<double>> sums;
  double max_abs = 0.0;
  double normalized = 0.0;
};

PartialSumProfile partial_sums(const Character& chi);

/// max_{1<=x<=p} |sum_{n<=x} chi(n)| without materialising the profile.
double max_partial_sum(const Character& chi);
/// M(chi) / (e^gamma sqrt(p) / pi).
double normalized_max_partial_sum(const Character& chi);

/// c[r] = sum of l in 1..p-1 with chi(l) = e(r / order(chi)), r in
/// 0..order-1. Exact integers; sum_r c[r] e(r/order) = sum_l l chi(l).
std::vector<std::int64_t> index_weighted_sums(const Character& chi);

/// tau(chi) = sum_k chi(k) e(k/p).
std::complex<double> gauss_sum(const Character& chi);

/// ker(chi) split by element order.
struct SubgroupPartition {
  std::uint64_t d = 0;
  std::vector<std::uint64_t> elements;
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_order;
};

SubgroupPartition kernel_partition(const Character& chi);

}  // namespace charsum
