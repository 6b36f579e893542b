#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charsum {

enum class CaseStatus { Pass, Fail, Skipped };

std::string_view to_string(CaseStatus status) noexcept;

/// One verified instance: labelled inputs, the values each route produced,
/// and the residual compared against the tolerance.
struct CaseResult {
  std::string label;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> values;
  double residual = 0.0;
  double tolerance = 0.0;
  CaseStatus status = CaseStatus::Pass;
  std::string note;

  bool passed() const noexcept { return status != CaseStatus::Fail; }
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;

  /// Adds a case whose status is decided by residual <= tolerance.
  CaseResult& add_case(CaseResult c);
  /// Adds a case with an explicit boolean verdict (exact identities use a
  /// residual of 0 or 1).
  CaseResult& add_exact(std::string label, bool ok,
                        std::vector<std::pair<std::string, std::string>> inputs = {},
                        std::vector<std::pair<std::string, std::string>> values = {});
  CaseResult& add_skipped(std::string label, std::string note);

  void merge(const VerificationReport& other);

  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept;
  std::size_t skipped() const noexcept;
  bool ok() const noexcept { return failed() == 0; }
  const CaseResult* first_failure() const noexcept;
};

}  // namespace charsum
