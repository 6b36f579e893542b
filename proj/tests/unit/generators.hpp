#pragma once

// Small seeded generators for property tests.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "charsum/elma.hpp"
#include "charsum/modular.hpp"

namespace testgen {

using charsum::is_prime;
using charsum::is_valid_elma_pair;

inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

/// Every valid (p, d) with lo <= p <= hi.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> valid_pairs(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (auto p : primes_in(lo, hi)) {
    for (std::uint64_t d = 1; 2 * d <= p - 1; d += 2) {
      if (is_valid_elma_pair(p, d)) out.emplace_back(p, d);
    }
  }
  return out;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  std::int64_t uniform_signed(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

  std::uint64_t prime(std::uint64_t lo, std::uint64_t hi) {
    for (;;) {
      const std::uint64_t n = uniform(lo, hi);
      if (is_prime(n)) return n;
    }
  }

  /// Random valid (p, d) with p in [lo, hi].
  std::pair<std::uint64_t, std::uint64_t> elma_pair(std::uint64_t lo, std::uint64_t hi) {
    for (;;) {
      const std::uint64_t p = prime(lo, hi);
      std::vector<std::uint64_t> ds;
      for (std::uint64_t d = 1; 2 * d <= p - 1; d += 2) {
        if (is_valid_elma_pair(p, d)) ds.push_back(d);
      }
      if (!ds.empty()) return {p, ds[uniform(0, ds.size() - 1)]};
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testgen
