#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace subword {

/// Arbitrary-precision nonnegative count. Closed formulas for M(N) grow
/// doubly exponentially, so anything that leaves the library as "M" is one
/// of these.
using BigCount = boost::multiprecision::cpp_int;

std::string to_decimal(const BigCount& value);

/// Parses a plain decimal string (no sign, no whitespace). Throws DomainError.
BigCount parse_decimal(std::string_view text);

// Checked 64-bit arithmetic. The std::optional forms return nullopt on
// overflow; the plain forms throw CountOverflow.
std::optional<std::uint64_t> try_add(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> try_mul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> try_pow(std::uint64_t base, std::uint64_t exponent);

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent);

}  // namespace subword
