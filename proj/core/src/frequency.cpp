#include "charsum/frequency.hpp"

#include <algorithm>
#include <cmath>

#include "charsum/characters.hpp"

namespace charsum {

double frequency_eta() { return static_cast<double>(std::exp(-kEulerGamma) * std::log(2.0L)); }

CharacterMaxima::CharacterMaxima(const PrimeContext& ctx) : p_(ctx.p()) {
  const std::uint64_t n = ctx.group_order();
  values_.resize(n);
  const double normalizer = static_cast<double>(std::exp(kEulerGamma) * std::sqrt(static_cast<long double>(p_)) / kPi);
  // principal character: partial sums reach p - 1
  values_[0] = static_cast<double>(n) / normalizer;
  for (std::uint64_t j = 1; j < n; ++j) values_[j] = normalized_max_partial_sum(Character(ctx, j));
  sorted_nontrivial_.assign(values_.begin() + 1, values_.end());
  std::sort(sorted_nontrivial_.begin(), sorted_nontrivial_.end());
  if (!sorted_nontrivial_.empty()) max_nontrivial_ = sorted_nontrivial_.back();
}

std::uint64_t CharacterMaxima::count_above(double tau, bool include_principal) const {
  const auto it = std::upper_bound(sorted_nontrivial_.begin(), sorted_nontrivial_.end(), tau);
  auto count = static_cast<std::uint64_t>(sorted_nontrivial_.end() - it);
  if (include_principal && values_[0] > tau) ++count;
  return count;
}

ExactRational phi_p(const CharacterMaxima& maxima, double tau, bool include_principal) {
  return ExactRational(BigInt(maxima.count_above(tau, include_principal)), BigInt(maxima.p() - 1));
}

ExactRational phi_p(const PrimeContext& ctx, double tau, bool include_principal) {
  return phi_p(CharacterMaxima(ctx), tau, include_principal);
}

double frequency_bound_main_term(double tau) {
  return std::exp(-std::exp(tau - 2.0 - frequency_eta()) / tau);
}

bool frequency_bound_in_range(std::uint64_t p, double tau) {
  const double loglog = std::log(std::log(static_cast<double>(p)));
  return tau >= 1.0 && tau <= loglog - 4.0;
}

FrequencyTable frequency_report(const CharacterMaxima& maxima, std::span<const double> taus, bool include_principal) {
  FrequencyTable table;
  table.p = maxima.p();
  table.include_principal = include_principal;
  for (double tau : taus) {
    FrequencyRow row;
    row.tau = tau;
    row.phi = phi_p(maxima, tau, include_principal);
    row.bound_main_term = tau > 0.0 ? frequency_bound_main_term(tau) : 1.0;
    row.in_valid_range = frequency_bound_in_range(maxima.p(), tau);
    table.rows.push_back(std::move(row));
  }
  return table;
}

FrequencyTable frequency_report(const PrimeContext& ctx, std::span<const double> taus, bool include_principal) {
  return frequency_report(CharacterMaxima(ctx), taus, include_principal);
}

}  // namespace charsum
