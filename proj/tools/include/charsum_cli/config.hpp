#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace charsum::cli {

enum class Format { Csv, Json, Text };

struct RunConfig {
  std::optional<std::uint64_t> p;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> p_range;
  std::vector<std::uint64_t> d;
  std::optional<std::pair<std::int64_t, std::int64_t>> a_range;
  std::optional<double> tolerance;
  Format format = Format::Csv;
  std::string out;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  bool include_principal = false;

  // Subcommand-specific.
  std::optional<std::int64_t> c;
  std::optional<std::int64_t> modulus;
  std::optional<std::pair<std::int64_t, std::int64_t>> modulus_range;
  std::vector<double> taus;
  std::optional<std::uint64_t> m;
};

/// "A..B" with A <= B; throws charsum::Error(BadParameters) otherwise.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text);

/// The primes selected by --p or --p-range. An explicit --p must be prime
/// (NotPrime); a range yields only its primes >= 3. Both absent or both
/// present is BadParameters.
std::vector<std::uint64_t> selected_primes(const RunConfig& cfg);

Format parse_format(const std::string& text);

}  // namespace charsum::cli
