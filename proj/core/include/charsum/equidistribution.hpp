#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "charsum/modular.hpp"
#include "charsum/report.hpp"

namespace charsum {

/// Minimum of r(h) = max(1,|h1|) max(1,|h2|) over nonzero h with
/// ||h||_inf <= p-1 and h1 + h2 lambda = 0 mod p, with one witness.
struct RhoResult {
  std::uint64_t rho = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;
};

RhoResult figure_of_merit_rho(const PrimeContext& ctx, std::uint64_t lambda);

/// sigma(lambda,p) = sum over the same solution set of 1/r(h), exact.
ExactRational figure_of_merit_sigma(const PrimeContext& ctx, std::uint64_t lambda);
/// Double-precision sigma (compensated), for sweeps where exactness is not
/// needed.
double figure_of_merit_sigma_approx(const PrimeContext& ctx, std::uint64_t lambda);
/// Number of h in the sigma summation set.
std::uint64_t sigma_term_count(const PrimeContext& ctx, std::uint64_t lambda);

struct LatticeQuantities {
  std::uint64_t lambda = 0;
  std::uint64_t order = 0;
  RhoResult rho;
  ExactRational sigma;
};

LatticeQuantities lattice_quantities(const PrimeContext& ctx, std::uint64_t lambda);

/// rho(lambda,p) >= p^{1/phi(k)} / sqrt(8) for every lambda of order k >= 3,
/// compared exactly as (8 rho^2)^{phi(k)} >= p^2.
VerificationReport rho_lower_bound_check(const PrimeContext& ctx);

/// Erdos-Turan-Koksma bound for S_theta in dimension 2:
///   (9/4) (2/(H+1) + sum_{0<||h||_inf<=H} delta_p(h1 + h2 theta) / r(h)).
/// The exponential sums over a full period are evaluated by orthogonality.
double etk_bound(const PrimeContext& ctx, std::uint64_t theta, std::uint64_t H);
/// The same bound with every exponential sum evaluated numerically; O(H^2 p).
double etk_bound_direct(const PrimeContext& ctx, std::uint64_t theta, std::uint64_t H);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// S_theta = {(x/p, x theta/p) : x mod p}.
std::vector<Point2> lattice_point_set(const PrimeContext& ctx, std::uint64_t theta);

inline constexpr std::size_t kExactDiscrepancyMaxPoints = 128;

/// Extreme discrepancy sup_B |#(B∩S)/N - area(B)| over half-open boxes in
/// [0,1]^2. Exact (O(N^3)); throws TooManyPoints above 128 points.
double exact_discrepancy_2d(std::span<const Point2> points);

/// Lower bound from random boxes with corners on the critical grid.
double sampled_discrepancy_lower_bound(std::span<const Point2> points, std::uint64_t samples, std::uint64_t seed);

/// f_d(x,y) = x/(d-1) + min(x,y) on [0,1]^2, d >= 3.
struct FdFunction {
  std::uint64_t d = 0;
  double hk_variation = 0.0;   // 3 + 1/(d-1)
  ExactRational integral;      // 1/(2(d-1)) + 1/3
};

FdFunction fd_function(std::uint64_t d);
ExactRational fd_value(std::uint64_t d, const ExactRational& x, const ExactRational& y);

/// Hardy-Krause variation of f_d (anchored at (1,1)) over a uniform n x n
/// partition: Vitali sum plus the variations of f_d(., 1) and f_d(1, .).
double fd_hk_variation_estimate(std::uint64_t d, std::uint64_t n);
/// The same on an arbitrary partition given by sorted breakpoints including
/// 0 and 1 on each axis.
double fd_hk_variation_on_partition(std::uint64_t d, std::span<const double> xs, std::span<const double> ys);

/// (1/p) sum_{x mod p} f_d(x/p, x theta/p), exact.
ExactRational fd_lattice_average(const PrimeContext& ctx, std::uint64_t d, std::uint64_t theta);

/// Koksma-Hlawka for every theta in ker(chi) \ {1}: the residual is the
/// quadrature error, the tolerance V(f_d) * etk_bound(theta, p-1).
VerificationReport koksma_hlawka_check(const PrimeContext& ctx, std::uint64_t d);

struct ErrorTermRecord {
  std::uint64_t p = 0;
  std::uint64_t d = 0;
  double error_term = 0.0;       // p V(f_d) sum_theta etk_bound(theta, p-1)
  ExactRational deviation;       // |A(p,d) - (2d+1)p/6|
  bool holds = false;
};

ErrorTermRecord error_term_assembly(const PrimeContext& ctx, std::uint64_t d);

}  // namespace charsum
