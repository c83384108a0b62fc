#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

namespace primeq::pi_table {

// Text table of pi(2^n) values, one "n,pi_value" record per line,
// '#' starts a comment. Used by analytic scans past sieve range.
std::map<int, uint64_t> load(const std::string& path);

std::map<int, uint64_t> parse(std::istream& in, const std::string& origin);

// Name of the environment variable holding the default table path.
inline constexpr const char* kEnvVar = "PRIMEQ_PI_TABLE";

// pi(2^n) provider for scans: file values first, then a sieve bounded by
// sieve_cap_bits, then nothing.
using Provider = std::function<std::optional<uint64_t>(int)>;

Provider table_provider(const std::map<int, uint64_t>& table);

}  // namespace primeq::pi_table
