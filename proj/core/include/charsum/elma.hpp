#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charsum/modular.hpp"

namespace charsum {

/// Checks d odd, d >= 1 and p = 1 mod 2d; returns m = (p-1)/d. Throws
/// BadParameters otherwise.
std::uint64_t elma_order(std::uint64_t p, std::uint64_t d);
bool is_valid_elma_pair(std::uint64_t p, std::uint64_t d) noexcept;

/// A(p,d) in O(p): grows N one step at a time, tracking how many earlier
/// n share the coset of N in F_p^* / ker(chi) (label ind(n) mod m).
ExactRational a_sum_definition(const PrimeContext& ctx, std::uint64_t d);

/// The literal O(p^3) triple sum, deciding chi(n1) = chi(n2) by
/// n1^d = n2^d mod p. Refuses p > max_p.
ExactRational a_sum_bruteforce(const PrimeContext& ctx, std::uint64_t d, std::uint64_t max_p = 100);

/// (1/(p-1)) sum over same-coset pairs of min(n1,n2). For d >= 3 also
/// evaluates the f_d form over the kernel split by element order and throws
/// std::logic_error if the two disagree.
ExactRational a_sum_min_formula(const PrimeContext& ctx, std::uint64_t d);

/// (p/(p-1)) sum_{k|d,k>1} sum_{theta in H_k} sum_{x mod p} f_d(x/p, x theta/p), d >= 3.
ExactRational a_sum_fd_form(const PrimeContext& ctx, std::uint64_t d);

/// Trivial-character term plus the partial-sum energies of chi^1..chi^{m-1}.
double a_sum_orthogonality(const PrimeContext& ctx, std::uint64_t d);

/// M(p,m) = (pi^2/6) ((p-1)/p^2) (12 A - (4d+1)p - d - 1) and its inverse.
double mean_square_from_a(std::uint64_t p, std::uint64_t d, const ExactRational& a);
double mean_square_from_a(std::uint64_t p, std::uint64_t d, double a);
double a_from_mean_square(std::uint64_t p, std::uint64_t d, double mean_square);

ExactRational elma_lower_bound(std::uint64_t p, std::uint64_t d);
ExactRational elma_upper_bound(std::uint64_t p, std::uint64_t d);

/// Closed forms at primes p = (a^d - 1)/(a - 1), d an odd prime.
struct SpecialFamilyValue {
  std::int64_t a = 0;
  std::uint64_t d = 0;
  std::uint64_t p = 0;
  BigInt q_value;      // Q_{(d-1)/2}(a^2)
  BigInt n_value;      // 2a(a+1)^2 Q - 1
  ExactRational a_value;
  double mean_square = 0.0;
};

/// Empty unless d is an odd prime, a not in {-1,0,1}, and p is a prime
/// with p = 1 mod 2d and p < 2^62.
std::optional<SpecialFamilyValue> closed_form_special(std::int64_t a, std::uint64_t d);

/// All a with (a^d - 1)/(a - 1) = p.
std::vector<std::int64_t> special_family_parameters(std::uint64_t p, std::uint64_t d);

struct ClosedForm {
  ExactRational value;
  std::string label;
};

/// d = 1: p/2; d = 3: (7p+2)/6; d an odd prime with p in the special family.
std::optional<ClosedForm> elma_closed_form(std::uint64_t p, std::uint64_t d);

struct ElmaRecord {
  std::uint64_t p = 0;
  std::uint64_t d = 0;
  std::uint64_t m = 0;
  ExactRational value_definition;
  ExactRational value_min_formula;
  double value_orthogonality = 0.0;
  double value_from_mean_square = 0.0;
  std::optional<ClosedForm> closed_form;
};

ElmaRecord elma_record(const PrimeContext& ctx, std::uint64_t d);

}  // namespace charsum
