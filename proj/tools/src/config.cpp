#include "charsum_cli/config.hpp"

#include <charconv>

#include "charsum/errors.hpp"
#include "charsum/modular.hpp"

namespace charsum::cli {

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw Error(ErrorKind::BadParameters, "bad range '" + whole + "', expected A..B");
  }
  return v;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) throw Error(ErrorKind::BadParameters, "bad range '" + text + "', expected A..B");
  const std::string_view sv(text);
  const auto lo = parse_int(sv.substr(0, pos), text);
  const auto hi = parse_int(sv.substr(pos + 2), text);
  if (lo > hi) throw Error(ErrorKind::BadParameters, "empty range '" + text + "'");
  return {lo, hi};
}

std::vector<std::uint64_t> selected_primes(const RunConfig& cfg) {
  if (cfg.p.has_value() == cfg.p_range.has_value()) {
    throw Error(ErrorKind::BadParameters, "give exactly one of --p and --p-range");
  }
  if (cfg.p) {
    if (!is_prime(*cfg.p) || *cfg.p < 3) throw Error(ErrorKind::NotPrime, std::to_string(*cfg.p) + " is not an odd prime");
    if (*cfg.p > default_max_prime()) throw Error(ErrorKind::TooLarge, "p exceeds the size cap");
    return {*cfg.p};
  }
  std::vector<std::uint64_t> out;
  const auto [lo, hi] = *cfg.p_range;
  if (hi < 3) throw Error(ErrorKind::BadParameters, "no odd primes in range");
  if (static_cast<std::uint64_t>(hi) > default_max_prime()) throw Error(ErrorKind::TooLarge, "range exceeds the size cap");
  for (auto n = static_cast<std::uint64_t>(std::max<std::int64_t>(3, lo)); n <= static_cast<std::uint64_t>(hi); ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  if (out.empty()) throw Error(ErrorKind::BadParameters, "no odd primes in range");
  return out;
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  if (text == "text") return Format::Text;
  throw Error(ErrorKind::BadParameters, "unknown format '" + text + "'");
}

}  // namespace charsum::cli
