#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace caltrace {

// RFC-3339 UTC timestamps at second precision: YYYY-MM-DDTHH:MM:SSZ.
// All stored and wire-visible timestamps use this form; internally times
// are unix seconds.
std::string format_rfc3339(std::int64_t unix_seconds);
std::int64_t parse_rfc3339(std::string_view text);  // throws std::invalid_argument

std::int64_t now_unix_seconds();

}  // namespace caltrace
