#include "charsum_cli/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace charsum::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::json cell_json(const Cell& c) {
  switch (c.kind()) {
    case Cell::Kind::Int:
      return c.as_int();
    case Cell::Kind::Double:
      if (!std::isfinite(c.as_double())) return c.text();
      return c.as_double();
    case Cell::Kind::Bool:
      return c.as_bool();
    case Cell::Kind::String:
      break;
  }
  return c.as_string();
}

}  // namespace

std::string Cell::text() const {
  switch (kind_) {
    case Kind::String:
      return s_;
    case Kind::Int:
      return std::to_string(i_);
    case Kind::Double: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d_);
      return buf;
    }
    case Kind::Bool:
      return b_ ? "true" : "false";
  }
  return {};
}

void Table::render(Format format, std::ostream& out) const {
  switch (format) {
    case Format::Csv: {
      for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_escape(columns[i]);
      out << '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i].text());
        out << '\n';
      }
      return;
    }
    case Format::Json: {
      nlohmann::ordered_json doc;
      doc["schema_version"] = kJsonSchemaVersion;
      doc["command"] = command;
      doc["columns"] = columns;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size() && i < columns.size(); ++i) obj[columns[i]] = cell_json(row[i]);
        arr.push_back(std::move(obj));
      }
      doc["rows"] = std::move(arr);
      nlohmann::ordered_json summary;
      summary["rows"] = rows.size();
      summary["failed"] = failed;
      for (const auto& [k, v] : notes) summary[k] = v;
      doc["summary"] = std::move(summary);
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::Text: {
      std::vector<std::size_t> width(columns.size());
      for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : rows) {
        auto& line = cells.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
          line.push_back(row[i].text());
          if (i < width.size()) width[i] = std::max(width[i], line.back().size());
        }
      }
      auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
          out << (i ? "  " : "") << line[i];
          if (i + 1 < line.size()) out << std::string(width[i] - line[i].size(), ' ');
        }
        out << '\n';
      };
      emit(columns);
      for (const auto& line : cells) emit(line);
      for (const auto& [k, v] : notes) out << k << ": " << v << '\n';
      out << rows.size() << " rows, " << failed << " failed\n";
      return;
    }
  }
}

}  // namespace charsum::cli
