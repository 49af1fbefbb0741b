#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "subword/count.hpp"
#include "subword/word.hpp"

namespace subword {

/// How a GlobalStats value was obtained.
enum class Method { closed, brute, graph, tree, formula };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// (K(N), R(N), M(N)) for words of length N over q letters.
///
/// M is empty only for Method::closed outside the small-N regime, where no
/// closed form for the count is known.
struct GlobalStats {
  unsigned q = 0;
  std::uint64_t N = 0;
  std::uint64_t K = 0;
  std::vector<std::uint64_t> R;  // ascending
  std::optional<BigCount> M;
  Method method = Method::closed;

  friend bool operator==(const GlobalStats&, const GlobalStats&) = default;
};

/// The unique k >= 1 with q^k + k <= N <= q^(k+1) + k (needs q >= 2, N > q).
struct Bracket {
  unsigned q = 0;
  std::uint64_t N = 0;
  unsigned k = 0;
  bool at_lower_endpoint = false;  // N == q^k + k, where R = {k, k+1}

  /// Letters removed from a full (k+1)-order de Bruijn word: q^(k+1) + k - N.
  std::uint64_t r() const;
};

/// Throws DomainError for q < 2 or N <= q (the small-N rule applies there).
Bracket bracket_k(unsigned q, std::uint64_t N);

std::uint64_t global_K(unsigned q, std::uint64_t N);
std::vector<std::uint64_t> global_R(unsigned q, std::uint64_t N);

/// q (q-1) ... (q-N+1), the number of words with N distinct letters. Needs 1 <= N <= q.
BigCount small_N_M(unsigned q, std::uint64_t N);

/// K and R by closed form; M only where q == 1 or N <= q.
GlobalStats closed_form_stats(unsigned q, std::uint64_t N);

using WordSink = std::function<void(const Word&)>;

struct BruteForceOptions {
  std::uint64_t budget = std::uint64_t{1} << 26;  // max number of words q^N
  unsigned threads = 0;                           // 0 = hardware concurrency
};

/// Exact (K, R, M) by enumerating all q^N words in lexicographic order.
/// R is the union of argmax lengths over the words attaining K. If `emit` is
/// set every maximal word is passed to it, in lexicographic order, from the
/// calling thread.
GlobalStats brute_force_stats(unsigned q, std::uint64_t N, const WordSink& emit = {},
                              const BruteForceOptions& options = {});

/// Resolves a thread-count option: 0 means hardware concurrency, at least 1.
unsigned resolve_threads(unsigned requested) noexcept;

}  // namespace subword
