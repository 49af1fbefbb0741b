#include "subword/count.hpp"

#include "subword/errors.hpp"

namespace subword {

std::string to_decimal(const BigCount& value) { return value.str(); }

BigCount parse_decimal(std::string_view text) {
  if (text.empty()) throw DomainError("empty decimal string");
  BigCount result = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw DomainError(std::string("invalid decimal digit '") + c + "'");
    }
    result = result * 10 + (c - '0');
  }
  return result;
}

std::optional<std::uint64_t> try_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> try_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> try_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    auto next = try_mul(result, base);
    if (!next) return std::nullopt;
    result = *next;
    // 0 and 1 are fixed points; no need to keep looping.
    if (base <= 1) break;
  }
  return exponent == 0 ? 1 : result;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (auto r = try_add(a, b)) return *r;
  throw CountOverflow("64-bit count overflow in addition");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (auto r = try_mul(a, b)) return *r;
  throw CountOverflow("64-bit count overflow in multiplication");
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent) {
  if (auto r = try_pow(base, exponent)) return *r;
  throw CountOverflow("64-bit count overflow in power " + std::to_string(base) + "^" +
                      std::to_string(exponent));
}

}  // namespace subword
