#pragma once

#include <cstdint>
#include <optional>

#include "subword/count.hpp"
#include "subword/global_complexity.hpp"

namespace subword {

// Counts of maximal-complexity words at the de Bruijn lengths N = q^k + k - 1.
// Both the binary and general formulas are kept so each checks the other.

inline constexpr std::uint64_t kDefaultExponentBudget = std::uint64_t{1} << 20;

/// 2^(2^(k-1)). Throws BudgetExceeded if 2^(k-1) exceeds `exponent_budget`.
BigCount m_at_debruijn_length_binary(unsigned k,
                                     std::uint64_t exponent_budget = kDefaultExponentBudget);

/// (q!)^(q^(k-1)). Throws BudgetExceeded if q^(k-1) exceeds `exponent_budget`.
BigCount m_at_debruijn_length(unsigned q, unsigned k,
                              std::uint64_t exponent_budget = kDefaultExponentBudget);

/// Number of Hamiltonian cycles of B(2,k): 2^(2^(k-1) - k).
BigCount hamiltonian_cycle_count_formula(unsigned k,
                                         std::uint64_t exponent_budget = kDefaultExponentBudget);

/// M at a de Bruijn length split as (start vertices, Hamiltonian cycles of
/// B(q,k)), starts = q^k. For q > 2 the cycle count is M / q^k; DomainError
/// if that division is not exact.
struct MDecomposition {
  BigCount starts;
  BigCount cycles;
};
MDecomposition decompose_m_theorem(unsigned q, unsigned k,
                                   std::uint64_t exponent_budget = kDefaultExponentBudget);

/// The k >= 1 with N == q^k + k - 1, if any.
std::optional<unsigned> debruijn_order(unsigned q, std::uint64_t N);

/// K, R by closed form and M by the de Bruijn-length formula.
/// Throws DomainError when N is not a de Bruijn length.
GlobalStats m_via_formula(unsigned q, std::uint64_t N,
                          std::uint64_t exponent_budget = kDefaultExponentBudget);

/// The general formula is stated without proof upstream, so it is checked
/// against enumeration wherever enumeration is affordable.
struct FormulaCheck {
  unsigned q = 0;
  unsigned k = 0;
  std::uint64_t N = 0;
  BigCount formula;
  std::optional<BigCount> enumerated;  // empty when over the brute-force budget

  bool verified() const { return enumerated && *enumerated == formula; }
};

FormulaCheck check_debruijn_formula(unsigned q, unsigned k, const BruteForceOptions& brute = {});

}  // namespace subword
