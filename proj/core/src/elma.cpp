#include "charsum/elma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "charsum/characters.hpp"
#include "charsum/errors.hpp"
#include "charsum/lvalues.hpp"

namespace charsum {

namespace {

BigInt from_int128(Int128 v) {
  const bool neg = v < 0;
  UInt128 u = neg ? static_cast<UInt128>(-v) : static_cast<UInt128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64U);
  out <<= 64U;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

std::string pair_label(std::uint64_t p, std::uint64_t d) {
  return "(p=" + std::to_string(p) + ", d=" + std::to_string(d) + ")";
}

}  // namespace

bool is_valid_elma_pair(std::uint64_t p, std::uint64_t d) noexcept {
  return d >= 1 && d % 2 == 1 && p >= 3 && (p - 1) % (2 * d) == 0;
}

std::uint64_t elma_order(std::uint64_t p, std::uint64_t d) {
  if (!is_valid_elma_pair(p, d)) {
    throw Error(ErrorKind::BadParameters, pair_label(p, d) + ": need d odd and p = 1 mod 2d");
  }
  return (p - 1) / d;
}

ExactRational a_sum_definition(const PrimeContext& ctx, std::uint64_t d) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t m = elma_order(p, d);
  const auto ind = ctx.index_table();
  std::vector<std::uint64_t> coset_count(m, 0);
  Int128 inner = 0;  // #{n1,n2 <= N : same coset}
  Int128 total = 0;
  for (std::uint64_t n = 1; n < p; ++n) {
    std::uint64_t& c = coset_count[ind[n] % m];
    inner += 2 * static_cast<Int128>(c) + 1;
    ++c;
    total += inner;
  }
  return ExactRational(from_int128(total), BigInt(p - 1));
}

ExactRational a_sum_bruteforce(const PrimeContext& ctx, std::uint64_t d, std::uint64_t max_p) {
  const std::uint64_t p = ctx.p();
  elma_order(p, d);
  if (p > max_p) {
    throw Error(ErrorKind::TooLarge, "literal triple sum limited to p <= " + std::to_string(max_p));
  }
  std::vector<std::uint64_t> dth_power(p);
  for (std::uint64_t n = 1; n < p; ++n) dth_power[n] = pow_mod(n, d, p);
  std::uint64_t total = 0;
  for (std::uint64_t big_n = 1; big_n < p; ++big_n) {
    for (std::uint64_t n1 = 1; n1 <= big_n; ++n1) {
      for (std::uint64_t n2 = 1; n2 <= big_n; ++n2) {
        if (dth_power[n1] == dth_power[n2]) ++total;
      }
    }
  }
  return ExactRational(BigInt(total), BigInt(p - 1));
}

ExactRational a_sum_fd_form(const PrimeContext& ctx, std::uint64_t d) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t m = elma_order(p, d);
  if (d < 3) throw Error(ErrorKind::BadParameters, "f_d needs d >= 3");
  const SubgroupPartition part = kernel_partition(character_of_order(ctx, m));
  // f_d(x/p, y/p) = (x + (d-1) min(x,y)) / (p (d-1)); accumulate numerators.
  Int128 numer = 0;
  for (const auto& [k, thetas] : part.by_order) {
    if (k == 1) continue;
    for (std::uint64_t theta : thetas) {
      for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t y = mul_mod(x, theta, p);
        numer += static_cast<Int128>(x) + static_cast<Int128>(d - 1) * std::min(x, y);
      }
    }
  }
  // (p/(p-1)) * numer / (p (d-1))
  return ExactRational(from_int128(numer), BigInt(p - 1) * (d - 1));
}

ExactRational a_sum_min_formula(const PrimeContext& ctx, std::uint64_t d) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t m = elma_order(p, d);
  const auto ind = ctx.index_table();
  // Within one coset with elements e_1 < ... < e_d the pair sum of min is
  // sum_i e_i (2(d - i) + 1); scanning n downwards gives d - i directly.
  std::vector<std::uint64_t> larger_seen(m, 0);
  Int128 total = 0;
  for (std::uint64_t n = p - 1; n >= 1; --n) {
    std::uint64_t& c = larger_seen[ind[n] % m];
    total += static_cast<Int128>(n) * (2 * c + 1);
    ++c;
  }
  ExactRational value(from_int128(total), BigInt(p - 1));
  if (d >= 3) {
    const ExactRational fd = a_sum_fd_form(ctx, d);
    if (fd != value) {
      throw std::logic_error("f_d form disagrees with the min form at " + pair_label(p, d));
    }
  }
  return value;
}

double a_sum_orthogonality(const PrimeContext& ctx, std::uint64_t d) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t m = elma_order(p, d);
  const long double pl = static_cast<long double>(p);
  // d/(p-1)^2 * sum N^2 = d p (2p-1) / (6 (p-1))
  const long double trivial = static_cast<long double>(d) * pl * (2.0L * pl - 1.0L) / (6.0L * (pl - 1.0L));
  const Character chi = character_of_order(ctx, m);
  CompensatedSum energy;
  for (std::uint64_t j = 1; j < m; ++j) energy.add(partial_sum_energy(chi.power(j)));
  return static_cast<double>(trivial + static_cast<long double>(energy.value()) /
                                           (static_cast<long double>(m) * (pl - 1.0L)));
}

double mean_square_from_a(std::uint64_t p, std::uint64_t d, const ExactRational& a) {
  const ExactRational bracket = 12 * a - ExactRational((4 * d + 1) * p + d + 1);
  const long double pl = static_cast<long double>(p);
  return static_cast<double>(kPi * kPi / 6.0L * (pl - 1.0L) / (pl * pl) * bracket.convert_to<long double>());
}

double mean_square_from_a(std::uint64_t p, std::uint64_t d, double a) {
  const long double pl = static_cast<long double>(p);
  const long double bracket = 12.0L * a - static_cast<long double>((4 * d + 1) * p + d + 1);
  return static_cast<double>(kPi * kPi / 6.0L * (pl - 1.0L) / (pl * pl) * bracket);
}

double a_from_mean_square(std::uint64_t p, std::uint64_t d, double mean_square) {
  const long double pl = static_cast<long double>(p);
  const long double bracket = static_cast<long double>(mean_square) * 6.0L / (kPi * kPi) * pl * pl / (pl - 1.0L);
  return static_cast<double>((bracket + static_cast<long double>((4 * d + 1) * p + d + 1)) / 12.0L);
}

ExactRational elma_lower_bound(std::uint64_t p, std::uint64_t d) {
  return ExactRational(BigInt((4 * d + 1) * p + d + 1), BigInt(12));
}

ExactRational elma_upper_bound(std::uint64_t p, std::uint64_t d) {
  return ExactRational(BigInt((5 * d + 1) * p + d + 1), BigInt(12));
}

std::optional<SpecialFamilyValue> closed_form_special(std::int64_t a, std::uint64_t d) {
  if (a >= -1 && a <= 1) return std::nullopt;
  if (d < 3 || !is_prime(d)) return std::nullopt;
  const BigInt ab(a);
  const BigInt num = boost::multiprecision::pow(ab, static_cast<unsigned>(d)) - 1;
  const BigInt pb = num / (ab - 1);
  if (pb <= 2 || pb > (BigInt(1) << 62)) return std::nullopt;
  const auto p = pb.convert_to<std::uint64_t>();
  if (!is_prime(p) || (p - 1) % (2 * d) != 0) return std::nullopt;

  SpecialFamilyValue out;
  out.a = a;
  out.d = d;
  out.p = p;
  const unsigned l = static_cast<unsigned>((d - 1) / 2);
  out.q_value = q_poly_eval(l, ab * ab);
  const BigInt core = ab * (ab + 1) * (ab + 1) * out.q_value;
  out.n_value = 2 * core - 1;
  out.a_value = ExactRational(BigInt(2 * d + 1) * pb * 2 + BigInt(d + 1), BigInt(12)) +
                ExactRational(pb * core, BigInt(6) * (pb - 1));
  const long double pl = static_cast<long double>(p);
  out.mean_square = static_cast<double>(kPi * kPi / 6.0L * (1.0L + out.n_value.convert_to<long double>() / pl));
  return out;
}

std::vector<std::int64_t> special_family_parameters(std::uint64_t p, std::uint64_t d) {
  std::vector<std::int64_t> out;
  if (d < 2) return out;
  const auto bound = static_cast<std::int64_t>(std::pow(static_cast<double>(p), 1.0 / static_cast<double>(d - 1))) + 2;
  for (std::int64_t a = -bound; a <= bound; ++a) {
    if (a >= -1 && a <= 1) continue;
    const BigInt ab(a);
    const BigInt val = (boost::multiprecision::pow(ab, static_cast<unsigned>(d)) - 1) / (ab - 1);
    if (val == p) out.push_back(a);
  }
  return out;
}

std::optional<ClosedForm> elma_closed_form(std::uint64_t p, std::uint64_t d) {
  if (!is_valid_elma_pair(p, d)) return std::nullopt;
  if (d == 1) return ClosedForm{ExactRational(BigInt(p), BigInt(2)), "d=1"};
  if (d == 3) return ClosedForm{ExactRational(BigInt(7 * p + 2), BigInt(6)), "d=3"};
  if (is_prime(d)) {
    for (std::int64_t a : special_family_parameters(p, d)) {
      if (auto sf = closed_form_special(a, d)) {
        return ClosedForm{sf->a_value, "family a=" + std::to_string(a)};
      }
    }
  }
  return std::nullopt;
}

ElmaRecord elma_record(const PrimeContext& ctx, std::uint64_t d) {
  ElmaRecord rec;
  rec.p = ctx.p();
  rec.d = d;
  rec.m = elma_order(rec.p, d);
  rec.value_definition = a_sum_definition(ctx, d);
  rec.value_min_formula = a_sum_min_formula(ctx, d);
  rec.value_orthogonality = a_sum_orthogonality(ctx, d);
  rec.value_from_mean_square = a_from_mean_square(rec.p, d, mean_square(ctx, rec.m).value);
  rec.closed_form = elma_closed_form(rec.p, d);
  return rec;
}

}  // namespace charsum
