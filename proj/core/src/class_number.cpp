#include "charsum/class_number.hpp"

#include <cmath>
#include <string>

#include "charsum/characters.hpp"
#include "charsum/elma.hpp"
#include "charsum/errors.hpp"
#include "charsum/lvalues.hpp"

namespace charsum {

namespace {

HighFloat high_pi() { return boost::math::constants::pi<HighFloat>(); }

std::string hf_str(const HighFloat& v, int digits = 20) { return v.str(digits, std::ios_base::scientific); }

}  // namespace

const BoundValue* ClassNumberRecord::bound(const std::string& name) const {
  for (const auto& b : bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

bool ClassNumberRecord::within_applicable_bounds() const {
  const HighFloat h(h_minus_int);
  for (const auto& b : bounds) {
    if (b.applicable && h > b.value * (1 + HighFloat("1e-30"))) return false;
  }
  return true;
}

std::vector<BoundValue> bound_suite(const PrimeContext& ctx, std::uint64_t d, const HighFloat& mean_sq_factor) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t m = elma_order(p, d);
  const HighFloat pf(p);
  const HighFloat quarter_m = HighFloat(m) / 4;
  std::vector<BoundValue> out;

  out.push_back({"walum", 2 * pf * pow(pf / 24, quarter_m), d == 1, "2p(p/24)^{m/4}, d = 1"});
  out.push_back({"trivial", 2 * pow(HighFloat(d) * pf / 24, quarter_m), d > 1, "2(dp/24)^{m/4}, w = 2"});
  out.push_back({"d3", 2 * pow(pf / 24, quarter_m), d == 3, "2(p/24)^{m/4}, d = 3"});

  std::int64_t family_a = 0;
  for (std::int64_t a : special_family_parameters(p, d)) {
    if (family_a == 0 || a < family_a) family_a = a;
  }
  const bool in_family = family_a != 0 && is_prime(d) && d >= 3;
  {
    std::string note = "2(p/24)^{m/4} at p = (a^5-1)/(a-1), a <= -2";
    if (d == 5 && in_family) note += "; family a = " + std::to_string(family_a);
    out.push_back({"d5", 2 * pow(pf / 24, quarter_m), d == 5 && in_family && family_a <= -2, note});
  }
  {
    std::string note = "2(p/24)^{m/4} at p = (a^d-1)/(a-1), a <= -2";
    if (in_family) note += "; family a = " + std::to_string(family_a);
    out.push_back({"family", 2 * pow(pf / 24, quarter_m), in_family && family_a <= -2, note});
  }

  const std::uint64_t w = d == 1 ? 2 * p : 2;
  // pM(p,m)/(4 pi^2) is the mean of the squared factors.
  out.push_back({"intermediate", HighFloat(w) * pow(mean_sq_factor, quarter_m), true, "w (pM/(4pi^2))^{m/4}"});
  out.push_back({"main", 2 * pow(mean_sq_factor, quarter_m), d > 1,
                 "2((1+o(1))p/24)^{m/4} with o(1) = 6M/pi^2 - 1"});
  out.push_back({"large_d", HighFloat(0), false, "absolute constant C unspecified; not evaluated"});
  return out;
}

ClassNumberRecord relative_class_number(const PrimeContext& ctx, std::uint64_t d) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t m = elma_order(p, d);
  ClassNumberRecord rec;
  rec.p = p;
  rec.d = d;
  rec.m = m;
  rec.w = d == 1 ? 2 * p : 2;

  // Digit budget from the double-precision mean square.
  {
    const double msq = mean_square(ctx, m).value;
    const double log10_bound = std::log10(static_cast<double>(rec.w)) +
                               static_cast<double>(m) / 4.0 *
                                   std::log10(static_cast<double>(p) * msq / (4.0 * static_cast<double>(kPi * kPi)));
    if (log10_bound > kClassNumberDigitBudget) {
      throw Error(ErrorKind::PrecisionBudgetExceeded,
                  "h^- for (p=" + std::to_string(p) + ", d=" + std::to_string(d) + ") may have " +
                      std::to_string(static_cast<int>(log10_bound)) + " digits");
    }
  }

  // bucket[r] = sum of l with ind(l) = r mod m; chi^t(l) = zeta_m^{t r}.
  std::vector<std::int64_t> bucket(m, 0);
  const auto ind = ctx.index_table();
  for (std::uint64_t l = 1; l < p; ++l) bucket[ind[l] % m] += static_cast<std::int64_t>(l);
  std::int64_t bucket_mass = 0;
  for (auto b : bucket) bucket_mass += b;

  std::vector<HighFloat> cos_t(m), sin_t(m);
  const HighFloat two_pi_over_m = 2 * high_pi() / HighFloat(m);
  for (std::uint64_t r = 0; r < m; ++r) {
    cos_t[r] = cos(two_pi_over_m * HighFloat(r));
    sin_t[r] = sin(two_pi_over_m * HighFloat(r));
  }

  const HighFloat unit_error("1e-97");
  HighFloat product = HighFloat(rec.w);
  HighFloat sum_sq_factors = 0;
  HighFloat relative_error = 0;
  for (std::uint64_t j = 1; j <= m / 2; ++j) {
    const std::uint64_t t = 2 * j - 1;
    HighFloat re = 0, im = 0;
    for (std::uint64_t r = 0; r < m; ++r) {
      if (bucket[r] == 0) continue;
      const std::uint64_t k = (t * r) % m;
      re += bucket[r] * cos_t[k];
      im += bucket[r] * sin_t[k];
    }
    const HighFloat modulus = sqrt(re * re + im * im);
    const HighFloat factor = modulus / (2 * HighFloat(p));
    product *= factor;
    sum_sq_factors += factor * factor;
    relative_error += unit_error * HighFloat(bucket_mass) / modulus;
  }
  rec.h_minus = product;
  rec.h_minus_int = static_cast<BigInt>(round(product));
  rec.integrality_residual = static_cast<double>(abs(product - HighFloat(rec.h_minus_int)));
  rec.error_bound = static_cast<double>(product * relative_error);
  rec.bounds = bound_suite(ctx, d, sum_sq_factors * 2 / HighFloat(m));
  return rec;
}

std::optional<BigInt> quadratic_class_number_from_a(const PrimeContext& ctx) {
  const std::uint64_t p = ctx.p();
  if (p % 4 != 3 || p <= 3) {
    throw Error(ErrorKind::BadParameters, "needs p = 3 mod 4 and p > 3, got " + std::to_string(p));
  }
  const std::uint64_t d = (p - 1) / 2;
  const ExactRational a = a_sum_definition(ctx, d);
  const BigInt pb(p);
  const ExactRational h_sq = (a - ExactRational(4 * pb * pb - pb + 1, BigInt(24))) * ExactRational(2 * (pb - 1), pb);
  if (denominator(h_sq) != 1 || numerator(h_sq) <= 0) return std::nullopt;
  const BigInt n = numerator(h_sq);
  const BigInt root = sqrt(n);
  if (root * root != n) return std::nullopt;
  return root;
}

VerificationReport a_legendre_consistency(const PrimeContext& ctx) {
  VerificationReport report;
  report.suite = "legendre-class-number";
  const std::uint64_t p = ctx.p();
  const auto h = quadratic_class_number_from_a(ctx);
  const ClassNumberRecord rec = relative_class_number(ctx, (p - 1) / 2);
  const bool ok = h.has_value() && *h >= 1 && *h == rec.h_minus_int;
  report.add_exact("p=" + std::to_string(p), ok, {{"p", std::to_string(p)}},
                   {{"h_from_A", h ? h->str() : std::string("not a square")},
                    {"h_minus", rec.h_minus_int.str()},
                    {"h_minus_float", hf_str(rec.h_minus)}});
  return report;
}

}  // namespace charsum
