#include "subword/closed_forms.hpp"

#include "subword/errors.hpp"

namespace subword {

namespace {

std::uint64_t exponent_within(unsigned base, unsigned power, std::uint64_t budget) {
  const auto e = try_pow(base, power);
  if (!e || *e > budget) {
    throw BudgetExceeded("exponent " + std::to_string(base) + "^" + std::to_string(power) +
                         " exceeds the exponent budget of " + std::to_string(budget));
  }
  return *e;
}

BigCount big_pow(const BigCount& base, std::uint64_t exponent) {
  BigCount result = 1;
  BigCount square = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

}  // namespace

BigCount m_at_debruijn_length_binary(unsigned k, std::uint64_t exponent_budget) {
  if (k < 1) throw DomainError("binary de Bruijn formula needs k >= 1");
  const std::uint64_t e = exponent_within(2, k - 1, exponent_budget);
  return BigCount(1) << e;
}

BigCount m_at_debruijn_length(unsigned q, unsigned k, std::uint64_t exponent_budget) {
  if (q < 2) throw DomainError("de Bruijn formula needs q >= 2");
  if (k < 1) throw DomainError("de Bruijn formula needs k >= 1");
  const std::uint64_t e = exponent_within(q, k - 1, exponent_budget);
  BigCount factorial = 1;
  for (unsigned i = 2; i <= q; ++i) factorial *= i;
  return big_pow(factorial, e);
}

BigCount hamiltonian_cycle_count_formula(unsigned k, std::uint64_t exponent_budget) {
  if (k < 1) throw DomainError("Hamiltonian cycle formula needs k >= 1");
  const std::uint64_t e = exponent_within(2, k - 1, exponent_budget);
  // 2^(k-1) >= k for every k >= 1, so the exponent is never negative.
  return BigCount(1) << (e - k);
}

MDecomposition decompose_m_theorem(unsigned q, unsigned k, std::uint64_t exponent_budget) {
  const BigCount total = m_at_debruijn_length(q, k, exponent_budget);
  const BigCount starts = big_pow(BigCount(q), k);
  if (total % starts != 0) {
    throw DomainError("M is not divisible by q^k for q=" + std::to_string(q) +
                      ", k=" + std::to_string(k));
  }
  MDecomposition d{starts, total / starts};
  if (q == 2 && d.cycles != hamiltonian_cycle_count_formula(k, exponent_budget)) {
    throw DomainError("binary cycle count disagrees with the general formula at k=" +
                      std::to_string(k));
  }
  return d;
}

std::optional<unsigned> debruijn_order(unsigned q, std::uint64_t N) {
  if (q < 2) return std::nullopt;
  for (unsigned k = 1;; ++k) {
    const auto p = try_pow(q, k);
    if (!p) return std::nullopt;
    const auto length = try_add(*p, k - 1);
    if (!length || *length > N) return std::nullopt;
    if (*length == N) return k;
  }
}

GlobalStats m_via_formula(unsigned q, std::uint64_t N, std::uint64_t exponent_budget) {
  const auto k = debruijn_order(q, N);
  if (!k) {
    throw DomainError("N=" + std::to_string(N) + " is not a de Bruijn length q^k+k-1 for q=" +
                      std::to_string(q));
  }
  const BigCount M = q == 2 ? m_at_debruijn_length_binary(*k, exponent_budget)
                            : m_at_debruijn_length(q, *k, exponent_budget);
  return GlobalStats{q, N, global_K(q, N), global_R(q, N), M, Method::formula};
}

FormulaCheck check_debruijn_formula(unsigned q, unsigned k, const BruteForceOptions& brute) {
  FormulaCheck check;
  check.q = q;
  check.k = k;
  check.N = checked_pow(q, k) + k - 1;
  check.formula = m_at_debruijn_length(q, k);
  try {
    check.enumerated = *brute_force_stats(q, check.N, {}, brute).M;
  } catch (const BudgetExceeded&) {
  }
  return check;
}

}  // namespace subword
