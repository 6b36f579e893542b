#include "charsum/report.hpp"

#include <algorithm>

#include "charsum/errors.hpp"

namespace charsum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::TrivialCharacter: return "TrivialCharacter";
    case ErrorKind::EvenCharacter: return "EvenCharacter";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::TooManyPoints: return "TooManyPoints";
    case ErrorKind::PrecisionBudgetExceeded: return "PrecisionBudgetExceeded";
  }
  return "Unknown";
}

std::string_view to_string(CaseStatus status) noexcept {
  switch (status) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skipped: return "skipped";
  }
  return "unknown";
}

CaseResult& VerificationReport::add_case(CaseResult c) {
  if (c.status != CaseStatus::Skipped) {
    // NaN residuals fail.
    c.status = (c.residual <= c.tolerance) ? CaseStatus::Pass : CaseStatus::Fail;
  }
  cases.push_back(std::move(c));
  return cases.back();
}

CaseResult& VerificationReport::add_exact(std::string label, bool ok,
                                          std::vector<std::pair<std::string, std::string>> inputs,
                                          std::vector<std::pair<std::string, std::string>> values) {
  CaseResult c;
  c.label = std::move(label);
  c.inputs = std::move(inputs);
  c.values = std::move(values);
  c.residual = ok ? 0.0 : 1.0;
  c.tolerance = 0.0;
  return add_case(std::move(c));
}

CaseResult& VerificationReport::add_skipped(std::string label, std::string note) {
  CaseResult c;
  c.label = std::move(label);
  c.status = CaseStatus::Skipped;
  c.note = std::move(note);
  cases.push_back(std::move(c));
  return cases.back();
}

void VerificationReport::merge(const VerificationReport& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

std::size_t VerificationReport::passed() const noexcept {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(),
                                                [](const CaseResult& c) { return c.status == CaseStatus::Pass; }));
}

std::size_t VerificationReport::failed() const noexcept {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(),
                                                [](const CaseResult& c) { return c.status == CaseStatus::Fail; }));
}

std::size_t VerificationReport::skipped() const noexcept {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(),
                                                [](const CaseResult& c) { return c.status == CaseStatus::Skipped; }));
}

const CaseResult* VerificationReport::first_failure() const noexcept {
  auto it = std::find_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.status == CaseStatus::Fail; });
  return it == cases.end() ? nullptr : &*it;
}

}  // namespace charsum
