#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace critlink {

// Shortest decimal form that round-trips back to the same double.
std::string format_double(double v);

bool parse_double(std::string_view s, double& out);
bool parse_int(std::string_view s, long long& out);

std::vector<std::string> split_fields(const std::string& line, char delimiter);
std::string trim(std::string_view s);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace critlink
