#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vodplan {

// Shortest representation that parses back to the identical double.
// Used for every number we write to a file, so that equal inputs
// produce byte-identical outputs.
std::string format_double(double value);

// Strict parsers: the whole token must be consumed. `what` names the
// field in the error message.
double parse_double(std::string_view token, std::string_view what);
std::uint64_t parse_u64(std::string_view token, std::string_view what);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

}  // namespace vodplan
