#include "charsum_cli/app.hpp"

#include <fstream>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "charsum/errors.hpp"
#include "charsum_cli/commands.hpp"

namespace charsum::cli {

namespace {

struct RawOptions {
  std::string p_range, a_range, modulus_range, format = "csv";
};

void add_common(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
  sub->add_option("--p", cfg.p, "odd prime modulus");
  sub->add_option("--p-range", raw.p_range, "primes in A..B");
  sub->add_option("--d", cfg.d, "one or more odd d with p = 1 mod 2d")->delimiter(',');
  sub->add_option("--format", raw.format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  sub->add_option("--out", cfg.out, "write the table to PATH instead of stdout");
  sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  sub->add_option("--seed", cfg.seed, "seed for sampled discrepancy and random suites");
  sub->add_option("--tolerance", cfg.tolerance, "override float tolerances")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character sums, Elma sums, L-values and relative class numbers mod p", "charsum"};
  app.require_subcommand(1);
  RunConfig cfg;
  RawOptions raw;
  std::map<CLI::App*, std::function<CommandResult(const RunConfig&)>> handlers;

  auto* asum = app.add_subcommand("asum", "A(p,d) by every route, with closed forms");
  add_common(asum, cfg, raw);
  handlers[asum] = cmd_asum;

  auto* msq = app.add_subcommand("msq", "mean square M(p,m) and its bounds");
  add_common(msq, cfg, raw);
  msq->add_option("--m", cfg.m, "order m = (p-1)/d instead of --d");
  handlers[msq] = cmd_msq;

  auto* ded = app.add_subcommand("dedekind", "Dedekind sums and reciprocity");
  add_common(ded, cfg, raw);
  ded->add_option("--c", cfg.c, "numerator c");
  ded->add_option("--modulus", cfg.modulus, "modulus >= 2");
  ded->add_option("--modulus-range", raw.modulus_range, "every coprime c < d for d in A..B");
  handlers[ded] = cmd_dedekind;

  auto* eq = app.add_subcommand("equidist", "rho, sigma, discrepancy and the ETK bound per theta");
  add_common(eq, cfg, raw);
  handlers[eq] = cmd_equidist;

  auto* freq = app.add_subcommand("freq", "Phi_p(tau) against the tail-bound main term");
  add_common(freq, cfg, raw);
  freq->add_option("--taus", cfg.taus, "comma-separated tau grid")->delimiter(',');
  freq->add_flag("--include-principal", cfg.include_principal, "count the principal character");
  handlers[freq] = cmd_freq;

  auto* cls = app.add_subcommand("classnum", "relative class numbers and their bounds");
  add_common(cls, cfg, raw);
  handlers[cls] = cmd_classnum;

  auto* fam = app.add_subcommand("scan-family", "primes p = (a^d-1)/(a-1) and their closed forms");
  add_common(fam, cfg, raw);
  fam->add_option("--a-range", raw.a_range, "a in A..B")->required();
  handlers[fam] = cmd_scan_family;

  auto* all = app.add_subcommand("verify-all", "every property suite at default scale");
  add_common(all, cfg, raw);
  handlers[all] = cmd_verify_all;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  CommandResult result;
  try {
    cfg.format = parse_format(raw.format);
    if (!raw.p_range.empty()) {
      const auto [lo, hi] = parse_range(raw.p_range);
      if (lo < 0) throw Error(ErrorKind::BadParameters, "--p-range must be nonnegative");
      cfg.p_range = std::make_pair(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi));
    }
    if (!raw.a_range.empty()) cfg.a_range = parse_range(raw.a_range);
    if (!raw.modulus_range.empty()) cfg.modulus_range = parse_range(raw.modulus_range);
    result = handlers.at(chosen)(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  if (cfg.out.empty()) {
    result.table.render(cfg.format, out);
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out << '\n';
      return kExitInvalidInput;
    }
    result.table.render(cfg.format, file);
  }
  if (!result.ok) {
    err << "verification failure: " << result.first_failure << '\n';
    return kExitVerificationFailure;
  }
  return kExitPass;
}

}  // namespace charsum::cli
