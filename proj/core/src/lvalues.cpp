#include "charsum/lvalues.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "charsum/errors.hpp"

namespace charsum {

namespace {

constexpr double kPiD = static_cast<double>(kPi);

void require_odd_nontrivial(const Character& chi) {
  if (chi.is_trivial()) throw Error(ErrorKind::TrivialCharacter, "|L(1,chi)|^2 needs a nontrivial character");
  if (!chi.is_odd()) {
    throw Error(ErrorKind::EvenCharacter, "exponent " + std::to_string(chi.exponent()) +
                                              " is even; the identity does not determine L(1,chi)");
  }
}

double full_period_constant(std::uint64_t p) {
  const double pd = static_cast<double>(p);
  return (pd * pd - 1.0) / 12.0;
}

}  // namespace

double partial_sum_energy(const Character& chi) {
  if (chi.is_trivial()) throw Error(ErrorKind::TrivialCharacter, "partial sums of the principal character");
  const PrimeContext& ctx = chi.context();
  const std::uint64_t n = ctx.group_order();
  const auto ind = ctx.index_table();
  const std::uint64_t j = chi.exponent();
  CompensatedSum re, im, energy;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const auto& z = ctx.root(static_cast<std::uint64_t>((static_cast<UInt128>(j) * ind[k]) % n));
    re.add(z.real());
    im.add(z.imag());
    const double sr = re.value(), si = im.value();
    energy.add(sr * sr + si * si);
  }
  return energy.value();
}

double l1_abs_sq_parseval(const Character& chi) {
  require_odd_nontrivial(chi);
  const double p = static_cast<double>(chi.context().p());
  return (kPiD * kPiD / (p * p)) * (partial_sum_energy(chi) - full_period_constant(chi.context().p()));
}

double l1_abs_sq_via_L0(const Character& chi) {
  require_odd_nontrivial(chi);
  const auto c = index_weighted_sums(chi);
  const std::uint64_t order = chi.order();
  const std::uint64_t step = chi.context().group_order() / order;
  CompensatedSum re, im;
  for (std::uint64_t r = 0; r < order; ++r) {
    const auto& z = chi.context().root(r * step);
    re.add(static_cast<double>(c[r]) * z.real());
    im.add(static_cast<double>(c[r]) * z.imag());
  }
  const double p = static_cast<double>(chi.context().p());
  const double l0_re = re.value() / p, l0_im = im.value() / p;
  return (kPiD * kPiD / p) * (l0_re * l0_re + l0_im * l0_im);
}

LValueRecord l_value_record(const Character& chi) {
  LValueRecord rec;
  rec.p = chi.context().p();
  rec.exponent = chi.exponent();
  rec.abs_sq_parseval = l1_abs_sq_parseval(chi);
  rec.abs_sq_via_L0 = l1_abs_sq_via_L0(chi);
  rec.residual = relative_residual(rec.abs_sq_parseval, rec.abs_sq_via_L0);
  return rec;
}

VerificationReport parseval_identity_check(const Character& chi, double tolerance) {
  VerificationReport report;
  report.suite = "parseval";
  const std::uint64_t p = chi.context().p();
  const std::string label = "p=" + std::to_string(p) + " j=" + std::to_string(chi.exponent());
  if (chi.is_trivial()) {
    report.add_skipped(label, "principal character is not primitive");
    return report;
  }
  const double lhs = partial_sum_energy(chi);
  double rhs = full_period_constant(p);
  if (chi.is_odd()) {
    const double pd = static_cast<double>(p);
    rhs += pd * pd / (kPiD * kPiD) * l1_abs_sq_via_L0(chi);
  }
  CaseResult c;
  c.label = label;
  c.inputs = {{"p", std::to_string(p)}, {"j", std::to_string(chi.exponent())}};
  c.values = {{"sum_abs_S_sq", std::to_string(lhs)}, {"rhs", std::to_string(rhs)},
              {"parity", chi.is_odd() ? "odd" : "even"}};
  c.residual = relative_residual(lhs, rhs);
  c.tolerance = tolerance;
  report.add_case(std::move(c));
  return report;
}

MeanSquareRecord mean_square(const PrimeContext& ctx, std::uint64_t m, std::optional<std::uint64_t> base_exponent) {
  Character base = character_of_order(ctx, m);
  if (base_exponent) {
    Character alt(ctx, *base_exponent);
    if (alt.order() != m || !alt.is_odd()) {
      throw Error(ErrorKind::BadOrder, "exponent " + std::to_string(*base_exponent) + " is not odd of order " +
                                           std::to_string(m));
    }
    base = alt;
  }
  CompensatedSum acc;
  for (std::uint64_t j = 1; j <= m / 2; ++j) acc.add(l1_abs_sq_via_L0(base.power(2 * j - 1)));
  MeanSquareRecord rec;
  rec.p = ctx.p();
  rec.m = m;
  rec.d = ctx.group_order() / m;
  rec.value = 2.0 * acc.value() / static_cast<double>(m);
  rec.route = MeanSquareRoute::Definition;
  return rec;
}

double mean_square_upper_bound(std::uint64_t p) {
  const long double t = std::log(static_cast<long double>(p)) + 2.0L + kEulerGamma - std::log(kPi);
  return static_cast<double>(t * t / 4.0L);
}

double walum_mean_square(std::uint64_t p) {
  const long double pd = static_cast<long double>(p);
  return static_cast<double>(kPi * kPi / 6.0L * (1.0L - 1.0L / pd) * (1.0L - 2.0L / pd));
}

double mean_square_trivial_bound(std::uint64_t p, std::uint64_t d) {
  return static_cast<double>(d) * walum_mean_square(p);
}

}  // namespace charsum
