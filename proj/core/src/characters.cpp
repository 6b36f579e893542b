#include "charsum/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "charsum/errors.hpp"

namespace charsum {

Character::Character(const PrimeContext& ctx, std::uint64_t exponent)
    : ctx_(&ctx), j_(exponent % ctx.group_order()) {
  order_ = ctx.group_order() / std::gcd(j_, ctx.group_order());
}

std::uint64_t Character::angle_index(std::uint64_t n) const {
  return mul_mod(j_, ctx_->ind(n), ctx_->group_order());
}

std::complex<double> Character::operator()(std::uint64_t n) const {
  if (n % ctx_->p() == 0) return {0.0, 0.0};
  return ctx_->root(angle_index(n));
}

Character Character::power(std::uint64_t k) const {
  return Character(*ctx_, mul_mod(j_, k, ctx_->group_order()));
}

Character Character::conjugate() const {
  return Character(*ctx_, (ctx_->group_order() - j_) % ctx_->group_order());
}

Character character_of_order(const PrimeContext& ctx, std::uint64_t m) {
  const std::uint64_t n = ctx.group_order();
  if (m == 0 || m % 2 != 0 || n % m != 0 || (n / m) % 2 == 0) {
    throw Error(ErrorKind::BadOrder, "m=" + std::to_string(m) + " is not an even divisor of " +
                                         std::to_string(n) + " with odd cofactor");
  }
  return Character(ctx, n / m);
}

namespace {

void require_nontrivial(const Character& chi) {
  if (chi.is_trivial()) throw Error(ErrorKind::TrivialCharacter, "operation needs a nontrivial character");
}

double pv_normalizer(std::uint64_t p) {
  return static_cast<double>(std::exp(kEulerGamma) * std::sqrt(static_cast<long double>(p)) / kPi);
}

}  // namespace

PartialSumProfile partial_sums(const Character& chi) {
  require_nontrivial(chi);
  const PrimeContext& ctx = chi.context();
  const std::uint64_t p = ctx.p();
  PartialSumProfile prof;
  prof.exponent = chi.exponent();
  prof.sums.resize(p);
  std::complex<double> s{0.0, 0.0};
  prof.sums[0] = s;
  for (std::uint64_t k = 1; k < p; ++k) {
    s += ctx.root(chi.angle_index(k));
    prof.sums[k] = s;
    prof.max_abs = std::max(prof.max_abs, std::abs(s));
  }
  prof.normalized = prof.max_abs / pv_normalizer(p);
  return prof;
}

double max_partial_sum(const Character& chi) {
  require_nontrivial(chi);
  const PrimeContext& ctx = chi.context();
  const std::uint64_t n = ctx.group_order();
  const auto ind = ctx.index_table();
  const std::uint64_t j = chi.exponent();
  double re = 0.0, im = 0.0, best = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const auto& z = ctx.root(static_cast<std::uint64_t>((static_cast<UInt128>(j) * ind[k]) % n));
    re += z.real();
    im += z.imag();
    best = std::max(best, re * re + im * im);
  }
  return std::sqrt(best);
}

double normalized_max_partial_sum(const Character& chi) {
  return max_partial_sum(chi) / pv_normalizer(chi.context().p());
}

std::vector<std::int64_t> index_weighted_sums(const Character& chi) {
  const PrimeContext& ctx = chi.context();
  const std::uint64_t n = ctx.group_order();
  const std::uint64_t step = n / chi.order();
  std::vector<std::int64_t> c(chi.order(), 0);
  for (std::uint64_t l = 1; l <= n; ++l) c[chi.angle_index(l) / step] += static_cast<std::int64_t>(l);
  return c;
}

std::complex<double> gauss_sum(const Character& chi) {
  require_nontrivial(chi);
  const PrimeContext& ctx = chi.context();
  const std::uint64_t p = ctx.p();
  CompensatedSum re, im;
  for (std::uint64_t k = 1; k < p; ++k) {
    const long double angle = 2.0L * kPi * static_cast<long double>(k) / static_cast<long double>(p);
    const std::complex<double> e{static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
    const std::complex<double> term = chi(k) * e;
    re.add(term.real());
    im.add(term.imag());
  }
  return {re.value(), im.value()};
}

SubgroupPartition kernel_partition(const Character& chi) {
  const PrimeContext& ctx = chi.context();
  const std::uint64_t n = ctx.group_order();
  const std::uint64_t d = n / chi.order();
  const std::uint64_t step = n / d;
  SubgroupPartition part;
  part.d = d;
  for (std::uint64_t k = 0; k < n; k += step) part.elements.push_back(ctx.power_of_generator(k));
  std::sort(part.elements.begin(), part.elements.end());
  for (std::uint64_t e : divisors(d)) part.by_order[e];
  for (std::uint64_t theta : part.elements) part.by_order[ctx.order_of(theta)].push_back(theta);
  return part;
}

}  // namespace charsum
