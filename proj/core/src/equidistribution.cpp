#include "charsum/equidistribution.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "charsum/characters.hpp"
#include "charsum/elma.hpp"
#include "charsum/errors.hpp"

namespace charsum {

namespace {

void check_lambda(const PrimeContext& ctx, std::uint64_t lambda) {
  if (lambda == 0 || lambda >= ctx.p()) {
    throw Error(ErrorKind::BadParameters, "lambda must lie in 1..p-1, got " + std::to_string(lambda));
  }
}

// For h2 = 1..p-1 the two solutions h1 in (-p,p) are r0 and r0 - p with
// r0 = -h2 lambda mod p in 1..p-1; the solutions with h2 < 0 mirror these.
// h2 = 0 forces p | h1, impossible for 0 < |h1| <= p-1.
template <typename Visit>
void for_each_positive_h2(const PrimeContext& ctx, std::uint64_t lambda, std::uint64_t H, Visit&& visit) {
  const std::uint64_t p = ctx.p();
  for (std::uint64_t h2 = 1; h2 <= H; ++h2) {
    const std::uint64_t r0 = (p - mul_mod(h2, lambda, p)) % p;
    visit(h2, r0);
  }
}

}  // namespace

RhoResult figure_of_merit_rho(const PrimeContext& ctx, std::uint64_t lambda) {
  check_lambda(ctx, lambda);
  const std::uint64_t p = ctx.p();
  RhoResult best{std::numeric_limits<std::uint64_t>::max(), 0, 0};
  for_each_positive_h2(ctx, lambda, p - 1, [&](std::uint64_t h2, std::uint64_t r0) {
    const std::uint64_t neg = p - r0;
    if (h2 * neg < best.rho) best = {h2 * neg, -static_cast<std::int64_t>(neg), static_cast<std::int64_t>(h2)};
    if (h2 * r0 < best.rho) best = {h2 * r0, static_cast<std::int64_t>(r0), static_cast<std::int64_t>(h2)};
  });
  return best;
}

ExactRational figure_of_merit_sigma(const PrimeContext& ctx, std::uint64_t lambda) {
  check_lambda(ctx, lambda);
  const std::uint64_t p = ctx.p();
  // sigma = 2 sum_{h2} (1/(h2 r0) + 1/(h2 (p - r0))) = 2p sum_{h2} 1/(h2 r0 (p - r0)).
  std::vector<std::uint64_t> dens;
  dens.reserve(p - 1);
  for_each_positive_h2(ctx, lambda, p - 1, [&](std::uint64_t h2, std::uint64_t r0) {
    const UInt128 den = static_cast<UInt128>(h2) * r0 * (p - r0);
    if (den > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorKind::TooLarge, "exact sigma needs p < 2^21");
    }
    dens.push_back(static_cast<std::uint64_t>(den));
  });
  BigInt lcm = 1;
  for (std::uint64_t den : dens) {
    const std::uint64_t rem = static_cast<std::uint64_t>(lcm % den);
    const std::uint64_t g = std::gcd(rem, den);
    lcm *= den / g;
  }
  BigInt numer = 0;
  for (std::uint64_t den : dens) numer += lcm / den;
  return ExactRational(BigInt(2 * p) * numer, lcm);
}

double figure_of_merit_sigma_approx(const PrimeContext& ctx, std::uint64_t lambda) {
  check_lambda(ctx, lambda);
  const std::uint64_t p = ctx.p();
  CompensatedSum acc;
  for_each_positive_h2(ctx, lambda, p - 1, [&](std::uint64_t h2, std::uint64_t r0) {
    const double h = static_cast<double>(h2);
    acc.add(1.0 / (h * static_cast<double>(r0)));
    acc.add(1.0 / (h * static_cast<double>(p - r0)));
  });
  return 2.0 * acc.value();
}

std::uint64_t sigma_term_count(const PrimeContext& ctx, std::uint64_t lambda) {
  check_lambda(ctx, lambda);
  return 4 * (ctx.p() - 1);
}

LatticeQuantities lattice_quantities(const PrimeContext& ctx, std::uint64_t lambda) {
  LatticeQuantities q;
  q.lambda = lambda;
  q.order = ctx.order_of(lambda);
  q.rho = figure_of_merit_rho(ctx, lambda);
  q.sigma = figure_of_merit_sigma(ctx, lambda);
  return q;
}

VerificationReport rho_lower_bound_check(const PrimeContext& ctx) {
  VerificationReport report;
  report.suite = "rho-lower-bound";
  const std::uint64_t p = ctx.p();
  const BigInt p_sq = BigInt(p) * p;
  for (std::uint64_t lambda = 1; lambda < p; ++lambda) {
    const std::uint64_t k = ctx.order_of(lambda);
    if (k < 3) continue;
    const std::uint64_t phi = euler_phi(k);
    const RhoResult r = figure_of_merit_rho(ctx, lambda);
    const BigInt lhs = boost::multiprecision::pow(BigInt(8) * r.rho * r.rho, static_cast<unsigned>(phi));
    const double bound = std::pow(static_cast<double>(p), 1.0 / static_cast<double>(phi)) / std::sqrt(8.0);
    report.add_exact("p=" + std::to_string(p) + " lambda=" + std::to_string(lambda), lhs >= p_sq,
                     {{"p", std::to_string(p)}, {"lambda", std::to_string(lambda)}, {"order", std::to_string(k)}},
                     {{"rho", std::to_string(r.rho)}, {"bound", std::to_string(bound)}});
  }
  return report;
}

double etk_bound(const PrimeContext& ctx, std::uint64_t theta, std::uint64_t H) {
  check_lambda(ctx, theta);
  const std::uint64_t p = ctx.p();
  if (H == 0 || H >= p) throw Error(ErrorKind::BadParameters, "H must lie in 1..p-1");
  CompensatedSum acc;
  for_each_positive_h2(ctx, theta, H, [&](std::uint64_t h2, std::uint64_t r0) {
    const double h = static_cast<double>(h2);
    if (r0 <= H) acc.add(2.0 / (h * static_cast<double>(r0)));
    if (p - r0 <= H) acc.add(2.0 / (h * static_cast<double>(p - r0)));
  });
  return 2.25 * (2.0 / static_cast<double>(H + 1) + acc.value());
}

double etk_bound_direct(const PrimeContext& ctx, std::uint64_t theta, std::uint64_t H) {
  check_lambda(ctx, theta);
  const std::uint64_t p = ctx.p();
  if (H == 0 || H >= p) throw Error(ErrorKind::BadParameters, "H must lie in 1..p-1");
  std::vector<std::complex<double>> e(p);
  for (std::uint64_t k = 0; k < p; ++k) {
    const long double a = 2.0L * kPi * static_cast<long double>(k) / static_cast<long double>(p);
    e[k] = {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
  }
  const auto h_max = static_cast<std::int64_t>(H);
  const auto ps = static_cast<std::int64_t>(p);
  CompensatedSum acc;
  for (std::int64_t h1 = -h_max; h1 <= h_max; ++h1) {
    for (std::int64_t h2 = -h_max; h2 <= h_max; ++h2) {
      if (h1 == 0 && h2 == 0) continue;
      // frequency of x in <h, (x/p, x theta/p)>
      std::int64_t freq = (h1 + h2 * static_cast<std::int64_t>(theta)) % ps;
      if (freq < 0) freq += ps;
      std::complex<double> s{0.0, 0.0};
      std::uint64_t idx = 0;
      for (std::uint64_t x = 1; x <= p; ++x) {
        idx += static_cast<std::uint64_t>(freq);
        if (idx >= p) idx -= p;
        s += e[idx];
      }
      const double r = static_cast<double>(std::max<std::int64_t>(1, std::abs(h1)) *
                                           std::max<std::int64_t>(1, std::abs(h2)));
      acc.add(std::abs(s) / static_cast<double>(p) / r);
    }
  }
  return 2.25 * (2.0 / static_cast<double>(H + 1) + acc.value());
}

std::vector<Point2> lattice_point_set(const PrimeContext& ctx, std::uint64_t theta) {
  const std::uint64_t p = ctx.p();
  std::vector<Point2> pts;
  pts.reserve(p);
  const double pd = static_cast<double>(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    pts.push_back({static_cast<double>(x) / pd, static_cast<double>(mul_mod(x, theta % p, p)) / pd});
  }
  return pts;
}

namespace {

struct RankedPoints {
  std::vector<double> xs;                      // unique sorted x
  std::vector<double> ys;                      // unique sorted y
  std::vector<std::vector<std::size_t>> by_x;  // y ranks per x rank
};

RankedPoints rank_points(std::span<const Point2> points) {
  RankedPoints r;
  for (const auto& pt : points) {
    if (!(pt.x >= 0.0 && pt.x < 1.0 && pt.y >= 0.0 && pt.y < 1.0)) {
      throw Error(ErrorKind::BadParameters, "points must lie in [0,1)^2");
    }
    r.xs.push_back(pt.x);
    r.ys.push_back(pt.y);
  }
  std::sort(r.xs.begin(), r.xs.end());
  r.xs.erase(std::unique(r.xs.begin(), r.xs.end()), r.xs.end());
  std::sort(r.ys.begin(), r.ys.end());
  r.ys.erase(std::unique(r.ys.begin(), r.ys.end()), r.ys.end());
  r.by_x.resize(r.xs.size());
  for (const auto& pt : points) {
    const auto xi = static_cast<std::size_t>(std::lower_bound(r.xs.begin(), r.xs.end(), pt.x) - r.xs.begin());
    const auto yi = static_cast<std::size_t>(std::lower_bound(r.ys.begin(), r.ys.end(), pt.y) - r.ys.begin());
    r.by_x[xi].push_back(yi);
  }
  return r;
}

// sup of count/N - area: closed boxes [X_i, X_j] x [Y_k, Y_l] (limits of
// half-open boxes whose right edges move just past a point).
double closed_box_excess(const RankedPoints& r, double n) {
  const std::size_t a = r.xs.size(), b = r.ys.size();
  std::vector<double> cnt(b);
  double best = 0.0;
  for (std::size_t i = 0; i < a; ++i) {
    std::fill(cnt.begin(), cnt.end(), 0.0);
    for (std::size_t j = i; j < a; ++j) {
      for (std::size_t y : r.by_x[j]) cnt[y] += 1.0;
      const double w = r.xs[j] - r.xs[i];
      double running = -std::numeric_limits<double>::infinity();
      double prefix = 0.0;
      for (std::size_t l = 0; l < b; ++l) {
        running = std::max(running, w * r.ys[l] - prefix / n);
        prefix += cnt[l];
        best = std::max(best, prefix / n - w * r.ys[l] + running);
      }
    }
  }
  return best;
}

// sup of area - count/N: open boxes (u0,u1) x (v0,v1) with u0 in {0} ∪ X,
// u1 in X ∪ {1}, likewise in y.
double open_box_deficit(const RankedPoints& r, double n) {
  std::vector<double> lower{0.0};
  lower.insert(lower.end(), r.xs.begin(), r.xs.end());
  lower.erase(std::unique(lower.begin(), lower.end()), lower.end());
  std::vector<double> upper(r.xs.begin(), r.xs.end());
  upper.push_back(1.0);

  std::vector<double> v{0.0};
  v.insert(v.end(), r.ys.begin(), r.ys.end());
  v.push_back(1.0);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  // y rank -> index into v
  std::vector<std::size_t> y_to_v(r.ys.size());
  for (std::size_t i = 0; i < r.ys.size(); ++i) {
    y_to_v[i] = static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), r.ys[i]) - v.begin());
  }

  std::vector<double> cnt(v.size());
  double best = 0.0;
  for (double u0 : lower) {
    std::fill(cnt.begin(), cnt.end(), 0.0);
    // first x rank strictly greater than u0
    std::size_t next_x = static_cast<std::size_t>(std::upper_bound(r.xs.begin(), r.xs.end(), u0) - r.xs.begin());
    for (double u1 : upper) {
      if (u1 <= u0) continue;
      while (next_x < r.xs.size() && r.xs[next_x] < u1) {
        for (std::size_t y : r.by_x[next_x]) cnt[y_to_v[y]] += 1.0;
        ++next_x;
      }
      const double w = u1 - u0;
      double best_k = -std::numeric_limits<double>::infinity();
      double q_prev = 0.0;  // Q(l-1)
      for (std::size_t l = 0; l < v.size(); ++l) {
        if (l >= 1) best = std::max(best, w * v[l] - q_prev / n + best_k);
        const double q_l = q_prev + cnt[l];
        best_k = std::max(best_k, q_l / n - w * v[l]);
        q_prev = q_l;
      }
    }
  }
  return best;
}

}  // namespace

double exact_discrepancy_2d(std::span<const Point2> points) {
  if (points.empty()) throw Error(ErrorKind::BadParameters, "empty point set");
  if (points.size() > kExactDiscrepancyMaxPoints) {
    throw Error(ErrorKind::TooManyPoints, std::to_string(points.size()) + " points; exact discrepancy capped at " +
                                              std::to_string(kExactDiscrepancyMaxPoints));
  }
  const RankedPoints r = rank_points(points);
  const double n = static_cast<double>(points.size());
  return std::max(closed_box_excess(r, n), open_box_deficit(r, n));
}

double sampled_discrepancy_lower_bound(std::span<const Point2> points, std::uint64_t samples, std::uint64_t seed) {
  if (points.empty()) throw Error(ErrorKind::BadParameters, "empty point set");
  const RankedPoints r = rank_points(points);
  std::vector<double> gx{0.0}, gy{0.0};
  gx.insert(gx.end(), r.xs.begin(), r.xs.end());
  gy.insert(gy.end(), r.ys.begin(), r.ys.end());
  gx.push_back(1.0);
  gy.push_back(1.0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_x(0, gx.size() - 1), pick_y(0, gy.size() - 1);
  const double n = static_cast<double>(points.size());
  double best = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    double x0 = gx[pick_x(rng)], x1 = gx[pick_x(rng)];
    double y0 = gy[pick_y(rng)], y1 = gy[pick_y(rng)];
    if (x1 < x0) std::swap(x0, x1);
    if (y1 < y0) std::swap(y0, y1);
    std::size_t closed = 0, open = 0;
    for (const auto& pt : points) {
      if (pt.x >= x0 && pt.x <= x1 && pt.y >= y0 && pt.y <= y1) ++closed;
      if (pt.x > x0 && pt.x < x1 && pt.y > y0 && pt.y < y1) ++open;
    }
    const double area = (x1 - x0) * (y1 - y0);
    best = std::max({best, static_cast<double>(closed) / n - area, area - static_cast<double>(open) / n});
  }
  return best;
}

FdFunction fd_function(std::uint64_t d) {
  if (d < 3) throw Error(ErrorKind::BadParameters, "f_d needs d >= 3");
  FdFunction f;
  f.d = d;
  f.hk_variation = 3.0 + 1.0 / static_cast<double>(d - 1);
  f.integral = ExactRational(BigInt(1), BigInt(2 * (d - 1))) + ExactRational(BigInt(1), BigInt(3));
  return f;
}

ExactRational fd_value(std::uint64_t d, const ExactRational& x, const ExactRational& y) {
  if (d < 3) throw Error(ErrorKind::BadParameters, "f_d needs d >= 3");
  return x / ExactRational(d - 1) + (x < y ? x : y);
}

double fd_hk_variation_on_partition(std::uint64_t d, std::span<const double> xs, std::span<const double> ys) {
  if (d < 3) throw Error(ErrorKind::BadParameters, "f_d needs d >= 3");
  const double c = 1.0 / static_cast<double>(d - 1);
  auto f = [c](double x, double y) { return c * x + std::min(x, y); };
  double vitali = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      vitali += std::fabs(f(xs[i + 1], ys[j + 1]) - f(xs[i], ys[j + 1]) - f(xs[i + 1], ys[j]) + f(xs[i], ys[j]));
    }
  }
  double vx = 0.0, vy = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) vx += std::fabs(f(xs[i + 1], 1.0) - f(xs[i], 1.0));
  for (std::size_t j = 0; j + 1 < ys.size(); ++j) vy += std::fabs(f(1.0, ys[j + 1]) - f(1.0, ys[j]));
  return vitali + vx + vy;
}

double fd_hk_variation_estimate(std::uint64_t d, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::BadParameters, "grid size must be positive");
  std::vector<double> grid(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) grid[i] = static_cast<double>(i) / static_cast<double>(n);
  return fd_hk_variation_on_partition(d, grid, grid);
}

ExactRational fd_lattice_average(const PrimeContext& ctx, std::uint64_t d, std::uint64_t theta) {
  if (d < 3) throw Error(ErrorKind::BadParameters, "f_d needs d >= 3");
  const std::uint64_t p = ctx.p();
  std::uint64_t numer = 0;  // sum of x + (d-1) min(x, y), fits easily for p < 2^20
  for (std::uint64_t x = 0; x < p; ++x) {
    numer += x + (d - 1) * std::min(x, mul_mod(x, theta, p));
  }
  return ExactRational(BigInt(numer), BigInt(p) * p * (d - 1));
}

VerificationReport koksma_hlawka_check(const PrimeContext& ctx, std::uint64_t d) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t m = elma_order(p, d);
  VerificationReport report;
  report.suite = "koksma-hlawka";
  if (d < 3) {
    report.add_skipped("p=" + std::to_string(p) + " d=1", "kernel is trivial");
    return report;
  }
  const FdFunction f = fd_function(d);
  const SubgroupPartition part = kernel_partition(character_of_order(ctx, m));
  for (std::uint64_t theta : part.elements) {
    if (theta == 1) continue;
    const ExactRational avg = fd_lattice_average(ctx, d, theta);
    const ExactRational err = abs(avg - f.integral);
    const double bound = f.hk_variation * etk_bound(ctx, theta, p - 1);
    CaseResult c;
    c.label = "p=" + std::to_string(p) + " d=" + std::to_string(d) + " theta=" + std::to_string(theta);
    c.inputs = {{"p", std::to_string(p)}, {"d", std::to_string(d)}, {"theta", std::to_string(theta)}};
    c.values = {{"average", avg.str()}, {"integral", f.integral.str()}};
    c.residual = to_double(err);
    c.tolerance = bound;
    report.add_case(std::move(c));
  }
  return report;
}

ErrorTermRecord error_term_assembly(const PrimeContext& ctx, std::uint64_t d) {
  const std::uint64_t p = ctx.p();
  const std::uint64_t m = elma_order(p, d);
  if (d < 3) throw Error(ErrorKind::BadParameters, "error term assembly needs d >= 3");
  const FdFunction f = fd_function(d);
  const SubgroupPartition part = kernel_partition(character_of_order(ctx, m));
  CompensatedSum acc;
  for (std::uint64_t theta : part.elements) {
    if (theta != 1) acc.add(etk_bound(ctx, theta, p - 1));
  }
  ErrorTermRecord rec;
  rec.p = p;
  rec.d = d;
  rec.error_term = static_cast<double>(p) * f.hk_variation * acc.value();
  rec.deviation = abs(a_sum_definition(ctx, d) - ExactRational(BigInt((2 * d + 1) * p), BigInt(6)));
  rec.holds = to_double(rec.deviation) <= rec.error_term;
  return rec;
}

}  // namespace charsum
