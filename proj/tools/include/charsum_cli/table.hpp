#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "charsum_cli/config.hpp"

namespace charsum::cli {

/// Cells are strings, integers, doubles or booleans. Doubles render with
/// 17 significant digits so output is byte-stable for a fixed input.
class Cell {
 public:
  enum class Kind { String, Int, Double, Bool };
  Cell(std::string s) : kind_(Kind::String), s_(std::move(s)) {}
  Cell(const char* s) : kind_(Kind::String), s_(s) {}
  Cell(long long v) : kind_(Kind::Int), i_(v) {}
  Cell(int v) : kind_(Kind::Int), i_(v) {}
  Cell(long v) : kind_(Kind::Int), i_(v) {}
  Cell(unsigned long v) : kind_(Kind::Int), i_(static_cast<long long>(v)) {}
  Cell(unsigned long long v) : kind_(Kind::Int), i_(static_cast<long long>(v)) {}
  Cell(double v) : kind_(Kind::Double), d_(v) {}
  Cell(bool v) : kind_(Kind::Bool), b_(v) {}

  Kind kind() const noexcept { return kind_; }
  std::string text() const;
  const std::string& as_string() const noexcept { return s_; }
  long long as_int() const noexcept { return i_; }
  double as_double() const noexcept { return d_; }
  bool as_bool() const noexcept { return b_; }

 private:
  Kind kind_;
  std::string s_;
  long long i_ = 0;
  double d_ = 0.0;
  bool b_ = false;
};

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Extra key/value lines for text output and a "summary" object in JSON.
  std::vector<std::pair<std::string, std::string>> notes;
  std::size_t failed = 0;

  void render(Format format, std::ostream& out) const;
};

inline constexpr int kJsonSchemaVersion = 1;

}  // namespace charsum::cli
