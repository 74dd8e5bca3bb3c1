#pragma once

// Output helpers shared by the CLI translation units.

#include "hullcount/cli.hpp"
#include "hullcount/error.hpp"
#include "hullcount/exactnum.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace hullcount::cli::detail {

/// RFC 4180 quoting, applied only when needed.
inline std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// Counts as JSON numbers when they fit in 64 bits, otherwise as decimal strings.
inline nlohmann::ordered_json json_count(const ExactInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return nlohmann::ordered_json(static_cast<std::uint64_t>(value));
  }
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min()) {
    return nlohmann::ordered_json(static_cast<std::int64_t>(value));
  }
  return nlohmann::ordered_json(value.str());
}

inline const char* bool_str(bool b) { return b ? "true" : "false"; }

/// Pretty-printed with a trailing newline; key order follows insertion.
inline void write_json(std::ostream& out, const nlohmann::ordered_json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace hullcount::cli::detail
