#include "charsum_cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "charsum/characters.hpp"
#include "charsum/class_number.hpp"
#include "charsum/dedekind.hpp"
#include "charsum/elma.hpp"
#include "charsum/equidistribution.hpp"
#include "charsum/errors.hpp"
#include "charsum/frequency.hpp"
#include "charsum/lvalues.hpp"
#include "charsum/modular.hpp"
#include "charsum_cli/parallel.hpp"

namespace charsum::cli {

namespace {

// Brute-force cross-checks in scan-family stay below this p.
constexpr std::uint64_t kFamilyBruteForceLimit = 20000;
constexpr std::uint64_t kSampledDiscrepancyBoxes = 4000;

using Row = std::vector<Cell>;

std::string rat(const ExactRational& q) { return q.str(); }

std::string sci(const HighFloat& v) { return v.str(12, std::ios_base::scientific); }

struct PairItem {
  std::uint64_t p;
  std::uint64_t d;
};

/// (p,d) pairs from --p/--p-range and --d. An explicit --p with an explicit
/// invalid d is an input error; ranges skip invalid pairs.
std::vector<PairItem> selected_pairs(const RunConfig& cfg) {
  const auto primes = selected_primes(cfg);
  std::vector<PairItem> out;
  for (auto p : primes) {
    if (cfg.m) {
      const std::uint64_t m = *cfg.m;
      if (m != 0 && (p - 1) % m == 0 && is_valid_elma_pair(p, (p - 1) / m)) {
        out.push_back({p, (p - 1) / m});
      } else if (cfg.p) {
        throw Error(ErrorKind::BadOrder, "m=" + std::to_string(m) + " is not an even divisor of p-1 with odd cofactor");
      }
      continue;
    }
    if (cfg.d.empty()) {
      for (std::uint64_t d = 1; 2 * d <= p - 1; d += 2) {
        if (is_valid_elma_pair(p, d)) out.push_back({p, d});
      }
      continue;
    }
    for (auto d : cfg.d) {
      if (is_valid_elma_pair(p, d)) {
        out.push_back({p, d});
      } else if (cfg.p) {
        (void)elma_order(p, d);  // throws BadParameters with the reason
      }
    }
  }
  if (out.empty()) throw Error(ErrorKind::BadParameters, "no valid (p,d) pairs selected");
  return out;
}

struct RowResult {
  Row row;
  bool pass = true;
  std::string label;
};

CommandResult collect(Table table, std::vector<RowResult> results) {
  CommandResult res;
  res.table = std::move(table);
  for (auto& r : results) {
    if (!r.pass) {
      ++res.table.failed;
      if (res.ok) res.first_failure = r.label;
      res.ok = false;
    }
    res.table.rows.push_back(std::move(r.row));
  }
  return res;
}

}  // namespace

CommandResult cmd_asum(const RunConfig& cfg) {
  const double tol = cfg.tolerance.value_or(1e-6);
  const auto items = selected_pairs(cfg);
  auto results = parallel_map<RowResult>(items.size(), cfg.jobs, [&](std::size_t i) {
    const auto [p, d] = items[i];
    const auto ctx = PrimeContext::build(p);
    RowResult r;
    r.label = "p=" + std::to_string(p) + " d=" + std::to_string(d);
    ElmaRecord rec;
    std::string min_route;
    try {
      rec = elma_record(ctx, d);
      min_route = rat(rec.value_min_formula);
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const Error*>(&e)) throw;
      // f_d form disagreed with the min form.
      rec.p = p;
      rec.d = d;
      rec.m = (p - 1) / d;
      rec.value_definition = a_sum_definition(ctx, d);
      rec.value_orthogonality = a_sum_orthogonality(ctx, d);
      rec.value_from_mean_square = a_from_mean_square(p, d, mean_square(ctx, rec.m).value);
      rec.closed_form = elma_closed_form(p, d);
      min_route = std::string("error: ") + e.what();
      r.pass = false;
    }
    const double def = to_double(rec.value_definition);
    r.pass = r.pass && rec.value_definition == rec.value_min_formula &&
             std::fabs(rec.value_orthogonality - def) <= tol && std::fabs(rec.value_from_mean_square - def) <= tol;
    std::string closed = "", label = "";
    if (rec.closed_form) {
      closed = rat(rec.closed_form->value);
      label = rec.closed_form->label;
      r.pass = r.pass && rec.closed_form->value == rec.value_definition;
    }
    r.row = {p, d, rec.m, rat(rec.value_definition), min_route, rec.value_orthogonality,
             rec.value_from_mean_square, closed, label, r.pass};
    return r;
  });
  Table t;
  t.command = "asum";
  t.columns = {"p", "d", "m", "route_def", "route_min", "route_orth", "route_fromM", "closed_form", "case_label", "pass"};
  return collect(std::move(t), std::move(results));
}

CommandResult cmd_msq(const RunConfig& cfg) {
  const double tol = cfg.tolerance.value_or(1e-8);
  const auto items = selected_pairs(cfg);
  auto results = parallel_map<RowResult>(items.size(), cfg.jobs, [&](std::size_t i) {
    const auto [p, d] = items[i];
    const auto ctx = PrimeContext::build(p);
    const std::uint64_t m = (p - 1) / d;
    RowResult r;
    r.label = "p=" + std::to_string(p) + " m=" + std::to_string(m);
    const double msq = mean_square(ctx, m).value;
    const double from_a = mean_square_from_a(p, d, a_sum_definition(ctx, d));
    const double upper = mean_square_upper_bound(p);
    const double trivial = mean_square_trivial_bound(p, d);
    r.pass = relative_residual(msq, from_a) <= tol && msq >= 0 && msq <= upper && msq <= trivial * (1 + 1e-12);
    Cell walum = "";
    if (d == 1) {
      walum = walum_mean_square(p);
      r.pass = r.pass && relative_residual(msq, walum_mean_square(p)) <= tol;
    }
    r.row = {p, d, m, msq, from_a, walum, upper, trivial, r.pass};
    return r;
  });
  Table t;
  t.command = "msq";
  t.columns = {"p", "d", "m", "mean_square", "from_a", "walum", "upper_bound", "trivial_bound", "pass"};
  return collect(std::move(t), std::move(results));
}

CommandResult cmd_dedekind(const RunConfig& cfg) {
  std::vector<std::pair<std::int64_t, std::int64_t>> items;
  if (cfg.modulus_range) {
    const auto [lo, hi] = *cfg.modulus_range;
    if (lo < 2) throw Error(ErrorKind::BadModulus, "moduli must be >= 2");
    for (std::int64_t d = lo; d <= hi; ++d) {
      for (std::int64_t c = 1; c < d; ++c) {
        if (std::gcd(c, d) == 1) items.emplace_back(c, d);
      }
    }
  } else if (cfg.c && cfg.modulus) {
    (void)dedekind_sum(*cfg.c, *cfg.modulus);  // validates
    items.emplace_back(*cfg.c, *cfg.modulus);
  } else {
    throw Error(ErrorKind::BadParameters, "dedekind needs --c with --modulus, or --modulus-range");
  }
  auto results = parallel_map<RowResult>(items.size(), cfg.jobs, [&](std::size_t i) {
    const auto [c, d] = items[i];
    RowResult r;
    r.label = "c=" + std::to_string(c) + " modulus=" + std::to_string(d);
    const auto fast = dedekind_sum(c, d);
    const auto slow = dedekind_sum_sawtooth(c, d);
    Cell rhs = "", rec_ok = "";
    r.pass = fast == slow;
    if (c >= 1) {
      const bool ok = reciprocity_check(c, d).ok();
      rhs = rat(reciprocity_rhs(c, d));
      rec_ok = ok;
      r.pass = r.pass && ok;
    }
    r.row = {c, d, rat(fast), rat(slow), rhs, rec_ok, r.pass};
    return r;
  });
  Table t;
  t.command = "dedekind";
  t.columns = {"c", "modulus", "s_euclid", "s_sawtooth", "reciprocity_rhs", "reciprocity_ok", "pass"};
  return collect(std::move(t), std::move(results));
}

CommandResult cmd_equidist(const RunConfig& cfg) {
  const auto primes = selected_primes(cfg);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> items;
  for (auto p : primes) {
    for (std::uint64_t theta = 1; theta < p; ++theta) items.emplace_back(p, theta);
  }
  auto results = parallel_map<RowResult>(items.size(), cfg.jobs, [&](std::size_t i) {
    const auto [p, theta] = items[i];
    const auto ctx = PrimeContext::build(p);
    RowResult r;
    r.label = "p=" + std::to_string(p) + " theta=" + std::to_string(theta);
    const auto order = ctx.order_of(theta);
    const auto rho = figure_of_merit_rho(ctx, theta);
    const auto sigma = figure_of_merit_sigma(ctx, theta);
    const double etk = etk_bound(ctx, theta, p - 1);
    const auto pts = lattice_point_set(ctx, theta);
    double disc = 0.0;
    std::string kind;
    if (pts.size() <= kExactDiscrepancyMaxPoints) {
      disc = exact_discrepancy_2d(pts);
      kind = "exact";
    } else {
      disc = sampled_discrepancy_lower_bound(pts, kSampledDiscrepancyBoxes, cfg.seed * 1000003ULL + p * 7919ULL + theta);
      kind = "sampled_lower_bound";
    }
    Cell rho_bound = "n/a";
    r.pass = ExactRational(BigInt(1), BigInt(rho.rho)) <= sigma && disc <= etk;
    if (order >= 3) {
      const auto phi = static_cast<unsigned>(euler_phi(order));
      const bool ok = boost::multiprecision::pow(BigInt(8) * rho.rho * rho.rho, phi) >= BigInt(p) * p;
      rho_bound = ok;
      r.pass = r.pass && ok;
    }
    r.row = {p, theta, order, rho.rho, rat(sigma), etk, disc, kind, rho_bound, r.pass};
    return r;
  });
  Table t;
  t.command = "equidist";
  t.columns = {"p", "theta", "order", "rho", "sigma", "etk_bound", "discrepancy", "discrepancy_kind", "rho_lower_bound", "pass"};
  return collect(std::move(t), std::move(results));
}

CommandResult cmd_freq(const RunConfig& cfg) {
  const auto primes = selected_primes(cfg);
  std::vector<double> taus = cfg.taus;
  if (taus.empty()) {
    for (int i = 0; i <= 12; ++i) taus.push_back(0.25 * i);
  }
  auto tables = parallel_map<FrequencyTable>(primes.size(), cfg.jobs, [&](std::size_t i) {
    return frequency_report(PrimeContext::build(primes[i]), taus, cfg.include_principal);
  });
  Table t;
  t.command = "freq";
  t.columns = {"p", "tau", "phi_p", "phi_p_exact", "bound_main_term", "in_valid_range"};
  bool any_valid = false;
  for (const auto& ft : tables) {
    for (const auto& row : ft.rows) {
      t.rows.push_back({ft.p, row.tau, to_double(row.phi), rat(row.phi), row.bound_main_term, row.in_valid_range});
      any_valid = any_valid || row.in_valid_range;
    }
  }
  t.notes.emplace_back("include_principal", cfg.include_principal ? "true" : "false");
  if (!any_valid) t.notes.emplace_back("remark", "indicative comparison only: no tau satisfies 1 <= tau <= loglog p - 4");
  CommandResult res;
  res.table = std::move(t);
  return res;
}

CommandResult cmd_classnum(const RunConfig& cfg) {
  const auto items = selected_pairs(cfg);
  const bool single = items.size() == 1;
  auto results = parallel_map<RowResult>(items.size(), cfg.jobs, [&](std::size_t i) {
    const auto [p, d] = items[i];
    const auto ctx = PrimeContext::build(p);
    RowResult r;
    r.label = "p=" + std::to_string(p) + " d=" + std::to_string(d);
    ClassNumberRecord rec;
    try {
      rec = relative_class_number(ctx, d);
    } catch (const Error& e) {
      if (single || e.kind() != ErrorKind::PrecisionBudgetExceeded) throw;
      r.row = {p, d, (p - 1) / d, d == 1 ? 2 * p : 2, "precision_budget_exceeded", "", "", "", "", "", "", "", "", true};
      return r;
    }
    const double h = rec.h_minus_int.convert_to<double>();
    const double tol = cfg.tolerance.value_or(1e-4) * std::max(1.0, h);
    r.pass = rec.integrality_residual < tol && rec.h_minus_int >= 1 && rec.within_applicable_bounds();
    auto bound_cell = [&](const char* name) -> Cell {
      const auto* b = rec.bound(name);
      return b && b->applicable ? Cell(sci(b->value)) : Cell("n/a");
    };
    r.row = {p,
             d,
             rec.m,
             rec.w,
             rec.h_minus_int.str(),
             rec.h_minus.str(30),
             rec.integrality_residual,
             bound_cell("walum"),
             bound_cell("trivial"),
             bound_cell("d3"),
             bound_cell("d5"),
             bound_cell("intermediate"),
             bound_cell("main"),
             r.pass};
    return r;
  });
  Table t;
  t.command = "classnum";
  t.columns = {"p",    "d",      "m",  "w",  "h_minus",      "h_minus_float", "integrality_residual",
               "walum", "trivial", "d3", "d5", "intermediate", "main",          "pass"};
  return collect(std::move(t), std::move(results));
}

CommandResult cmd_scan_family(const RunConfig& cfg) {
  if (!cfg.a_range) throw Error(ErrorKind::BadParameters, "scan-family needs --a-range");
  std::vector<std::uint64_t> ds = cfg.d.empty() ? std::vector<std::uint64_t>{3, 5, 7} : cfg.d;
  for (auto d : ds) {
    if (d < 3 || !is_prime(d)) throw Error(ErrorKind::BadParameters, "family degree d must be an odd prime");
  }
  std::vector<std::pair<std::int64_t, std::uint64_t>> items;
  for (std::int64_t a = cfg.a_range->first; a <= cfg.a_range->second; ++a) {
    if (a >= -1 && a <= 1) continue;
    for (auto d : ds) items.emplace_back(a, d);
  }
  if (items.empty()) throw Error(ErrorKind::BadParameters, "a-range contains no admissible a");
  auto results = parallel_map<RowResult>(items.size(), cfg.jobs, [&](std::size_t i) {
    const auto [a, d] = items[i];
    RowResult r;
    r.label = "a=" + std::to_string(a) + " d=" + std::to_string(d);
    BigInt pb = 0, pw = 1;
    for (std::uint64_t k = 0; k < d; ++k) {
      pb += pw;
      pw *= a;
    }
    const std::string p_str = pb.str();
    auto skipped = [&](const char* status) {
      r.row = {a, d, p_str, status, "", "", "", "", true};
      return r;
    };
    if (pb >= (BigInt(1) << 62)) return skipped("too_large");
    const auto p = pb.convert_to<std::uint64_t>();
    if (!is_prime(p)) return skipped("composite");
    if ((p - 1) % (2 * d) != 0) return skipped("not_1_mod_2d");
    const auto s = closed_form_special(a, d);
    if (!s) return skipped("too_large");
    Cell brute = "", chain = "";
    if (p <= kFamilyBruteForceLimit && p <= default_max_prime()) {
      const auto ctx = PrimeContext::build(p);
      const auto a_def = a_sum_definition(ctx, d);
      brute = rat(a_def);
      r.pass = a_def == s->a_value;
    }
    if (a >= 2) {
      const auto c = chain_evaluate(a, d);
      if (c) {
        chain = rat(c->n_from_sums);
        r.pass = r.pass && c->consistent;
      }
    }
    r.row = {a, d, p_str, "ok", rat(s->a_value), s->mean_square, brute, chain, r.pass};
    return r;
  });
  Table t;
  t.command = "scan-family";
  t.columns = {"a", "d", "p", "status", "A_closed", "M_closed", "A_brute", "chain_N", "pass"};
  return collect(std::move(t), std::move(results));
}

namespace {

std::vector<std::uint64_t> primes_upto(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

/// Runs fn on each prime (possibly in parallel) and merges the reports in
/// prime order.
template <typename F>
VerificationReport per_prime(const std::string& suite, const std::vector<std::uint64_t>& primes, unsigned jobs, F fn) {
  auto parts = parallel_map<VerificationReport>(primes.size(), jobs, [&](std::size_t i) {
    const auto ctx = PrimeContext::build(primes[i]);
    return fn(ctx);
  });
  VerificationReport out;
  out.suite = suite;
  for (const auto& part : parts) out.merge(part);
  return out;
}

CaseResult numeric_case(std::string label, double residual, double tolerance) {
  CaseResult c;
  c.label = std::move(label);
  c.residual = residual;
  c.tolerance = tolerance;
  return c;
}

std::vector<std::uint64_t> valid_ds(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; 2 * d <= p - 1; d += 2) {
    if (is_valid_elma_pair(p, d)) out.push_back(d);
  }
  return out;
}

}  // namespace

CommandResult cmd_verify_all(const RunConfig& cfg) {
  const auto tol = [&](double dflt) { return cfg.tolerance.value_or(dflt); };
  std::vector<VerificationReport> suites;

  suites.push_back(per_prime("parseval", primes_upto(3, 200), cfg.jobs, [&](const PrimeContext& ctx) {
    VerificationReport rep;
    for (std::uint64_t j = 1; j < ctx.group_order(); ++j) rep.merge(parseval_identity_check(Character(ctx, j), tol(1e-9)));
    return rep;
  }));

  suites.push_back(per_prime("triple-route", primes_upto(5, 300), cfg.jobs, [&](const PrimeContext& ctx) {
    VerificationReport rep;
    for (auto d : valid_ds(ctx.p())) {
      const std::string label = "p=" + std::to_string(ctx.p()) + " d=" + std::to_string(d);
      const auto def = a_sum_definition(ctx, d);
      bool min_ok = false;
      try {
        min_ok = a_sum_min_formula(ctx, d) == def;
      } catch (const std::logic_error&) {
      }
      rep.add_exact(label + " definition=min", min_ok);
      rep.add_case(numeric_case(label + " orthogonality", std::fabs(a_sum_orthogonality(ctx, d) - to_double(def)), tol(1e-6)));
    }
    return rep;
  }));

  suites.push_back(per_prime("mean-square", primes_upto(5, 300), cfg.jobs, [&](const PrimeContext& ctx) {
    VerificationReport rep;
    const auto p = ctx.p();
    for (auto d : valid_ds(p)) {
      const std::string label = "p=" + std::to_string(p) + " d=" + std::to_string(d);
      const double msq = mean_square(ctx, (p - 1) / d).value;
      rep.add_case(numeric_case(label + " bridge", relative_residual(msq, mean_square_from_a(p, d, a_sum_definition(ctx, d))),
                                tol(1e-8)));
      rep.add_exact(label + " upper bound", msq <= mean_square_upper_bound(p));
    }
    rep.add_case(numeric_case("p=" + std::to_string(p) + " walum",
                              relative_residual(mean_square(ctx, p - 1).value, walum_mean_square(p)), tol(1e-9)));
    return rep;
  }));

  {
    VerificationReport rep;
    rep.suite = "special-family";
    for (std::int64_t a = -10; a <= 10; ++a) {
      for (std::uint64_t d : {3u, 5u, 7u}) {
        const auto s = closed_form_special(a, d);
        if (!s || s->p > kFamilyBruteForceLimit) continue;
        const auto ctx = PrimeContext::build(s->p);
        const std::string label = "a=" + std::to_string(a) + " d=" + std::to_string(d);
        rep.add_exact(label + " A", a_sum_definition(ctx, d) == s->a_value);
        rep.add_case(numeric_case(label + " M", relative_residual(mean_square(ctx, (s->p - 1) / d).value, s->mean_square),
                                  tol(1e-8)));
      }
    }
    suites.push_back(std::move(rep));
  }

  {
    VerificationReport rep;
    rep.suite = "dedekind";
    for (std::int64_t d = 2; d <= 100; ++d) {
      for (std::int64_t c = 1; c < d; ++c) {
        if (std::gcd(c, d) == 1) rep.merge(reciprocity_check(c, d));
      }
      rep.add_exact("complementary d=" + std::to_string(d),
                    dedekind_sum(1, d) == ExactRational(BigInt((d - 1) * (d - 2)), BigInt(12 * d)));
    }
    std::mt19937_64 rng(cfg.seed);
    for (int done = 0; done < 200;) {
      const auto d = static_cast<std::int64_t>(std::uniform_int_distribution<std::uint64_t>(2, 1000000)(rng));
      const auto c = static_cast<std::int64_t>(std::uniform_int_distribution<std::uint64_t>(1, d - 1)(rng));
      if (std::gcd(c, d) != 1) continue;
      rep.add_exact("sawtooth c=" + std::to_string(c) + " d=" + std::to_string(d),
                    dedekind_sum(c, d) == dedekind_sum_sawtooth(c, d));
      ++done;
    }
    for (std::uint64_t d : {3u, 5u, 7u}) {
      for (std::int64_t a = 2; std::pow(static_cast<double>(a), static_cast<double>(d - 1)) <= 1e6; ++a) {
        const auto c = chain_evaluate(a, d);
        if (c && c->p <= 1000000) rep.add_exact("chain a=" + std::to_string(a) + " d=" + std::to_string(d), c->consistent);
      }
    }
    suites.push_back(std::move(rep));
  }

  suites.push_back(per_prime("equidistribution", primes_upto(3, 500), cfg.jobs, [&](const PrimeContext& ctx) {
    VerificationReport rep;
    const auto p = ctx.p();
    if (p <= 200) {
      rep.merge(rho_lower_bound_check(ctx));
      for (std::uint64_t lambda = 1; lambda < p; ++lambda) {
        rep.add_exact("p=" + std::to_string(p) + " lambda=" + std::to_string(lambda) + " 1/rho<=sigma",
                      ExactRational(BigInt(1), BigInt(figure_of_merit_rho(ctx, lambda).rho)) <=
                          figure_of_merit_sigma(ctx, lambda));
      }
    }
    if (p <= 61) {
      for (std::uint64_t theta = 1; theta < p; ++theta) {
        const double disc = exact_discrepancy_2d(lattice_point_set(ctx, theta));
        const double etk = etk_bound(ctx, theta, p - 1);
        rep.add_exact("p=" + std::to_string(p) + " theta=" + std::to_string(theta) + " D<=ETK", disc <= etk);
      }
    }
    for (auto d : valid_ds(p)) {
      if (d >= 3) rep.merge(koksma_hlawka_check(ctx, d));
    }
    return rep;
  }));

  suites.push_back(per_prime("frequency", {101, 401, 1009}, cfg.jobs, [&](const PrimeContext& ctx) {
    VerificationReport rep;
    const CharacterMaxima mx(ctx);
    const auto v = mx.by_exponent();
    const auto p = ctx.p();
    double worst = 0.0;
    for (std::uint64_t j = 1; j < p - 1; ++j) worst = std::max(worst, std::fabs(v[j] - v[p - 1 - j]));
    rep.add_case(numeric_case("p=" + std::to_string(p) + " conjugate symmetry", worst, tol(1e-9)));
    bool monotone = true;
    ExactRational prev = 2;
    for (int i = 0; i <= 40; ++i) {
      const auto phi = phi_p(mx, 0.1 * i);
      monotone = monotone && phi <= prev;
      prev = phi;
    }
    rep.add_exact("p=" + std::to_string(p) + " Phi_p monotone", monotone);
    return rep;
  }));

  suites.push_back(per_prime("class-number", primes_upto(3, 500), cfg.jobs, [&](const PrimeContext& ctx) {
    VerificationReport rep;
    const auto p = ctx.p();
    for (auto d : valid_ds(p)) {
      if (!(d == 1 && p <= 100) && (p - 1) / d > 20) continue;
      const auto rec = relative_class_number(ctx, d);
      const std::string label = "p=" + std::to_string(p) + " d=" + std::to_string(d);
      const double h = rec.h_minus_int.convert_to<double>();
      rep.add_case(numeric_case(label + " integrality", rec.integrality_residual, tol(1e-4) * std::max(1.0, h)));
      rep.add_exact(label + " bounds", rec.h_minus_int >= 1 && rec.within_applicable_bounds());
    }
    if (p % 4 == 3 && p > 3 && p <= 200) rep.merge(a_legendre_consistency(ctx));
    return rep;
  }));

  CommandResult res;
  Table& t = res.table;
  t.command = "verify-all";
  t.columns = {"suite", "cases", "passed", "failed", "skipped", "first_failure"};
  for (const auto& s : suites) {
    std::string first;
    if (const auto* f = s.first_failure()) {
      char buf[96];
      std::snprintf(buf, sizeof buf, " (residual %.3e > tolerance %.3e)", f->residual, f->tolerance);
      first = f->label + buf;
      if (res.ok) res.first_failure = s.suite + ": " + first;
      res.ok = false;
      ++t.failed;
    }
    t.rows.push_back({s.suite, s.cases.size(), s.passed(), s.failed(), s.skipped(), first});
  }
  return res;
}

}  // namespace charsum::cli
