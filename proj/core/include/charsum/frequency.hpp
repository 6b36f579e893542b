#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "charsum/modular.hpp"

namespace charsum {

/// eta = e^{-gamma} log 2.
double frequency_eta();

/// Renormalised maxima m(chi) for every character, indexed by exponent.
/// Entry 0 (the principal character) uses the same formula with chi_0.
class CharacterMaxima {
 public:
  explicit CharacterMaxima(const PrimeContext& ctx);

  std::uint64_t p() const noexcept { return p_; }
  std::span<const double> by_exponent() const noexcept { return values_; }
  double principal() const noexcept { return values_[0]; }

  /// #{chi : m(chi) > tau}, nontrivial characters only unless asked.
  std::uint64_t count_above(double tau, bool include_principal = false) const;
  double max_nontrivial() const noexcept { return max_nontrivial_; }

 private:
  std::uint64_t p_;
  std::vector<double> values_;
  std::vector<double> sorted_nontrivial_;
  double max_nontrivial_ = 0.0;
};

/// Phi_p(tau) = #{chi : m(chi) > tau} / (p-1), exact.
ExactRational phi_p(const CharacterMaxima& maxima, double tau, bool include_principal = false);
ExactRational phi_p(const PrimeContext& ctx, double tau, bool include_principal = false);

/// exp(-e^{tau-2-eta}/tau), the main term of the tail bound (tau > 0).
double frequency_bound_main_term(double tau);

/// log log p - 4 >= tau >= 1: where the tail bound's hypothesis holds.
bool frequency_bound_in_range(std::uint64_t p, double tau);

struct FrequencyRow {
  double tau = 0.0;
  ExactRational phi;
  double bound_main_term = 0.0;
  bool in_valid_range = false;
};

struct FrequencyTable {
  std::uint64_t p = 0;
  bool include_principal = false;
  std::vector<FrequencyRow> rows;
};

FrequencyTable frequency_report(const PrimeContext& ctx, std::span<const double> taus,
                                bool include_principal = false);
FrequencyTable frequency_report(const CharacterMaxima& maxima, std::span<const double> taus,
                                bool include_principal = false);

}  // namespace charsum
