#include "charsum/modular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

#include "charsum/errors.hpp"
#include "charsum/numeric.hpp"

namespace charsum {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<UInt128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) {
    throw Error(ErrorKind::NotCoprime, std::to_string(a) + " has no inverse mod " + std::to_string(m));
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q != 0) continue;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.push_back({q, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [q, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t qk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      qk *= q;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * qk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (const auto& pp : factorize(n)) result = result / pp.prime * (pp.prime - 1);
  return result;
}

std::uint64_t gamma_d(std::uint64_t d) {
  std::uint64_t best = 0;
  for (std::uint64_t k : divisors(d)) best = std::max(best, euler_phi(k));
  return best;
}

BigInt q_poly_eval(unsigned l, const BigInt& x) {
  // Horner on coefficients 1, 2, ..., l-1 (highest degree first).
  BigInt acc = 0;
  for (unsigned c = 1; c + 1 <= l; ++c) acc = acc * x + c;
  return acc;
}

BigInt q_poly_eval_closed(unsigned l, const BigInt& x) {
  if (x == 1) throw Error(ErrorKind::BadParameters, "closed form of Q_l undefined at x = 1");
  const BigInt xm1 = x - 1;
  BigInt num = boost::multiprecision::pow(x, l) - 1 - BigInt(l) * xm1;
  BigInt den = xm1 * xm1;
  if (num % den != 0) throw Error(ErrorKind::BadParameters, "Q_l closed form not integral");
  return num / den;
}

std::uint64_t default_max_prime() {
  if (const char* env = std::getenv("CHARSUM_MAX_P"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 3) return v;
  }
  return 1ULL << 31U;
}

PrimeContext PrimeContext::build(std::uint64_t p) { return build(p, default_max_prime()); }

PrimeContext PrimeContext::build(std::uint64_t p, std::uint64_t max_p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not an odd prime");
  if (p > max_p || p > (1ULL << 32U)) {
    throw Error(ErrorKind::TooLarge, std::to_string(p) + " exceeds the configured limit " + std::to_string(max_p));
  }

  PrimeContext ctx;
  ctx.p_ = p;
  const std::uint64_t n = p - 1;
  ctx.divisors_ = divisors(n);
  ctx.phi_.reserve(ctx.divisors_.size());
  for (std::uint64_t e : ctx.divisors_) ctx.phi_.push_back(euler_phi(e));

  const auto fac = factorize(n);
  for (std::uint64_t g = 2; g < p; ++g) {
    const bool primitive = std::all_of(fac.begin(), fac.end(), [&](const PrimePower& pp) {
      return pow_mod(g, n / pp.prime, p) != 1;
    });
    if (primitive) {
      ctx.g_ = g;
      break;
    }
  }
  if (p == 3) ctx.g_ = 2;

  ctx.ind_.assign(p, 0);
  ctx.exp_.resize(n);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    ctx.exp_[k] = static_cast<std::uint32_t>(x);
    ctx.ind_[x] = static_cast<std::uint32_t>(k);
    x = mul_mod(x, ctx.g_, p);
  }

  ctx.roots_.resize(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const long double angle = 2.0L * kPi * static_cast<long double>(k) / static_cast<long double>(n);
    ctx.roots_[k] = {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
  }
  return ctx;
}

std::uint64_t PrimeContext::ind(std::uint64_t n) const {
  n %= p_;
  if (n == 0) throw Error(ErrorKind::BadParameters, "index of a multiple of p");
  return ind_[n];
}

std::uint64_t PrimeContext::order_of(std::uint64_t n) const {
  const std::uint64_t k = ind(n);
  return (p_ - 1) / std::gcd(k, p_ - 1);
}

}  // namespace charsum
