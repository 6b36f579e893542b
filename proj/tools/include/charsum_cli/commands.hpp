#pragma once

#include <string>

#include "charsum_cli/config.hpp"
#include "charsum_cli/table.hpp"

namespace charsum::cli {

struct CommandResult {
  Table table;
  bool ok = true;
  std::string first_failure;
};

// CSV columns per subcommand:
//   asum:        p,d,m,route_def,route_min,route_orth,route_fromM,closed_form,case_label,pass
//   msq:         p,d,m,mean_square,from_a,walum,upper_bound,trivial_bound,pass
//   dedekind:    c,modulus,s_euclid,s_sawtooth,reciprocity_rhs,reciprocity_ok,pass
//   equidist:    p,theta,order,rho,sigma,etk_bound,discrepancy,discrepancy_kind,rho_lower_bound,pass
//   freq:        p,tau,phi_p,phi_p_exact,bound_main_term,in_valid_range
//   classnum:    p,d,m,w,h_minus,h_minus_float,integrality_residual,walum,trivial,d3,d5,intermediate,main,pass
//   scan-family: a,d,p,status,A_closed,M_closed,A_brute,chain_N,pass
//   verify-all:  suite,cases,passed,failed,skipped,first_failure
CommandResult cmd_asum(const RunConfig& cfg);
CommandResult cmd_msq(const RunConfig& cfg);
CommandResult cmd_dedekind(const RunConfig& cfg);
CommandResult cmd_equidist(const RunConfig& cfg);
CommandResult cmd_freq(const RunConfig& cfg);
CommandResult cmd_classnum(const RunConfig& cfg);
CommandResult cmd_scan_family(const RunConfig& cfg);
CommandResult cmd_verify_all(const RunConfig& cfg);

}  // namespace charsum::cli
