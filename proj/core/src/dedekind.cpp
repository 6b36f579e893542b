#include "charsum/dedekind.hpp"

#include <numeric>
#include <string>

#include "charsum/errors.hpp"
#include "charsum/modular.hpp"

namespace charsum {

namespace {

void check_arguments(std::int64_t c, std::int64_t d) {
  if (d < 2) throw Error(ErrorKind::BadModulus, "modulus " + std::to_string(d) + " < 2");
  if (std::gcd(c, d) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(c) + ", " + std::to_string(d) + ") != 1");
  }
}

std::int64_t reduce(std::int64_t c, std::int64_t d) {
  const std::int64_t r = c % d;
  return r < 0 ? r + d : r;
}

}  // namespace

ExactRational dedekind_sum_sawtooth(std::int64_t c, std::int64_t d) {
  check_arguments(c, d);
  const std::int64_t cr = reduce(c, d);
  // ((n/d)) = (2n - d) / 2d for 0 < n < d; nc is never 0 mod d.
  Int128 acc = 0;
  std::int64_t r = 0;
  for (std::int64_t n = 1; n < d; ++n) {
    r += cr;
    if (r >= d) r -= d;
    acc += static_cast<Int128>(2 * n - d) * (2 * r - d);
  }
  const bool neg = acc < 0;
  UInt128 u = neg ? static_cast<UInt128>(-acc) : static_cast<UInt128>(acc);
  BigInt num = static_cast<std::uint64_t>(u >> 64U);
  num <<= 64U;
  num += static_cast<std::uint64_t>(u);
  if (neg) num = -num;
  return ExactRational(num, BigInt(4) * d * d);
}

ExactRational dedekind_sum(std::int64_t c, std::int64_t d) {
  check_arguments(c, d);
  // s(c,d) = rhs(c,d) - s(d mod c, c), applied along the Euclidean steps.
  ExactRational acc = 0;
  int sign = 1;
  std::int64_t a = reduce(c, d);
  std::int64_t b = d;
  while (b > 1 && a != 0) {
    // s(a,b) with 0 < a < b
    acc += sign * reciprocity_rhs(a, b);
    sign = -sign;
    const std::int64_t next = b % a;
    b = a;
    a = next;
  }
  return acc;
}

ExactRational reciprocity_rhs(std::int64_t c, std::int64_t d) {
  const BigInt cb(c), db(d);
  return ExactRational(cb * cb + db * db - 3 * cb * db + 1, 12 * cb * db);
}

VerificationReport reciprocity_check(std::int64_t c, std::int64_t d) {
  if (c < 1) throw Error(ErrorKind::BadModulus, "reciprocity check needs positive arguments");
  check_arguments(c, d);
  VerificationReport report;
  report.suite = "dedekind-reciprocity";
  // s(d, 1) is an empty sum.
  const ExactRational s_cd = dedekind_sum_sawtooth(c, d);
  const ExactRational s_dc = c >= 2 ? dedekind_sum_sawtooth(d, c) : ExactRational(0);
  const ExactRational rhs = reciprocity_rhs(c, d);
  report.add_exact("c=" + std::to_string(c) + " d=" + std::to_string(d), s_cd + s_dc == rhs,
                   {{"c", std::to_string(c)}, {"d", std::to_string(d)}},
                   {{"s(c,d)", s_cd.str()}, {"s(d,c)", s_dc.str()}, {"rhs", rhs.str()}});
  return report;
}

std::optional<ChainRecord> chain_evaluate(std::int64_t a, std::uint64_t d) {
  if (a < 2 || d < 3 || !is_prime(d)) return std::nullopt;
  const BigInt ab(a);
  const BigInt pb = (boost::multiprecision::pow(ab, static_cast<unsigned>(d)) - 1) / (ab - 1);
  if (pb > BigInt(1) << 62) return std::nullopt;
  const auto p = pb.convert_to<std::uint64_t>();
  if (!is_prime(p) || (p - 1) % (2 * d) != 0) return std::nullopt;

  ChainRecord rec;
  rec.a = a;
  rec.d = d;
  rec.p = p;
  const unsigned l = static_cast<unsigned>((d - 1) / 2);
  ExactRational sum = 0;
  std::uint64_t ak = 1;
  for (unsigned k = 1; k <= l; ++k) {
    ak = mul_mod(ak, static_cast<std::uint64_t>(a), p);
    rec.terms.push_back(dedekind_sum(static_cast<std::int64_t>(ak), static_cast<std::int64_t>(p)));
    sum += rec.terms.back();
  }
  rec.n_from_sums = 24 * sum - 3 + ExactRational(BigInt(2), pb);
  rec.n_closed = 2 * ab * (ab + 1) * (ab + 1) * q_poly_eval(l, ab * ab) - 1;
  rec.consistent = rec.n_from_sums == ExactRational(rec.n_closed);
  const long double pl = static_cast<long double>(p);
  rec.mean_square =
      static_cast<double>(kPi * kPi / 6.0L * (1.0L + rec.n_from_sums.convert_to<long double>() / pl));
  return rec;
}

}  // namespace charsum
