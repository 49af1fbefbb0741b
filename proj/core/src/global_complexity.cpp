#include "subword/global_complexity.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <thread>

#include "subword/errors.hpp"

namespace subword {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::closed: return "closed";
    case Method::brute: return "brute";
    case Method::graph: return "graph";
    case Method::tree: return "tree";
    case Method::formula: return "formula";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : {Method::closed, Method::brute, Method::graph, Method::tree, Method::formula}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

unsigned resolve_threads(unsigned requested) noexcept {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t Bracket::r() const { return checked_pow(q, k + 1) + k - N; }

Bracket bracket_k(unsigned q, std::uint64_t N) {
  if (q < 2) throw DomainError("bracket needs q >= 2");
  if (N <= q) throw DomainError("N <= q: use the small-N rule");
  // Lower endpoints q^k + k increase strictly with k; find the last one <= N.
  unsigned k = 1;
  for (;;) {
    auto next_power = try_pow(q, k + 1);
    if (!next_power) break;
    auto next_lower = try_add(*next_power, k + 1);
    if (!next_lower || *next_lower > N) break;
    ++k;
  }
  const std::uint64_t lower = checked_pow(q, k) + k;
  return Bracket{q, N, k, N == lower};
}

std::uint64_t global_K(unsigned q, std::uint64_t N) {
  if (q < 1 || N < 1) throw DomainError("global_K needs q >= 1 and N >= 1");
  if (q == 1) return 1;
  if (N <= q) return N;
  return N - bracket_k(q, N).k;
}

std::vector<std::uint64_t> global_R(unsigned q, std::uint64_t N) {
  if (q < 1 || N < 1) throw DomainError("global_R needs q >= 1 and N >= 1");
  if (q == 1) {
    std::vector<std::uint64_t> all(N);
    for (std::uint64_t i = 0; i < N; ++i) all[i] = i + 1;
    return all;
  }
  if (N <= q) return {1};
  const Bracket b = bracket_k(q, N);
  if (b.at_lower_endpoint) return {b.k, b.k + 1};
  return {b.k + 1};
}

BigCount small_N_M(unsigned q, std::uint64_t N) {
  if (N < 1 || N > q) throw DomainError("small_N_M needs 1 <= N <= q");
  BigCount result = 1;
  for (std::uint64_t i = 0; i < N; ++i) result *= (q - i);
  return result;
}

GlobalStats closed_form_stats(unsigned q, std::uint64_t N) {
  GlobalStats s{q, N, global_K(q, N), global_R(q, N), std::nullopt, Method::closed};
  if (q == 1) {
    s.M = BigCount(1);
  } else if (N <= q) {
    s.M = small_N_M(q, N);
  }
  return s;
}

namespace {

// Result for one contiguous range of word indices. `lengths[n]` marks n as an
// argmax length of some word attaining `best`.
struct PartialStats {
  std::uint64_t best = 0;
  std::vector<char> lengths;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> maximal;  // word indices, only when emitting

  void merge(PartialStats&& other) {
    if (other.best < best) return;
    if (other.best > best) {
      *this = std::move(other);
      return;
    }
    for (std::size_t n = 0; n < lengths.size(); ++n) lengths[n] |= other.lengths[n];
    count = checked_add(count, other.count);
    maximal.insert(maximal.end(), other.maximal.begin(), other.maximal.end());
  }
};

// Profile scanner for words of a fixed length, reusing its buffers.
class ProfileScanner {
 public:
  ProfileScanner(unsigned q, std::size_t n) : q_(q), n_(n), codes_(n), scratch_(n), values_(n) {}

  // Fills values()[i] = f(i + 1) for the word in `letters`.
  void scan(std::span<const Symbol> letters) {
    for (std::size_t i = 0; i < n_; ++i) codes_[i] = letters[i];
    for (std::size_t len = 1; len <= n_; ++len) {
      const std::size_t windows = n_ - len + 1;
      if (len > 1) {
        for (std::size_t i = 0; i < windows; ++i) codes_[i] = codes_[i] * q_ + letters[i + len - 1];
      }
      std::copy_n(codes_.begin(), windows, scratch_.begin());
      std::sort(scratch_.begin(), scratch_.begin() + static_cast<std::ptrdiff_t>(windows));
      values_[len - 1] = static_cast<std::uint64_t>(
          std::unique(scratch_.begin(), scratch_.begin() + static_cast<std::ptrdiff_t>(windows)) -
          scratch_.begin());
    }
  }

  std::span<const std::uint64_t> values() const { return values_; }

 private:
  std::uint64_t q_;
  std::size_t n_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint64_t> values_;
};

PartialStats scan_range(unsigned q, std::size_t n, std::uint64_t first, std::uint64_t last,
                        bool keep_words) {
  PartialStats out;
  out.lengths.assign(n + 1, 0);
  std::vector<Symbol> letters(n, 0);
  {
    std::uint64_t idx = first;
    for (std::size_t i = n; i-- > 0;) {
      letters[i] = static_cast<Symbol>(idx % q);
      idx /= q;
    }
  }
  ProfileScanner scanner(q, n);
  for (std::uint64_t idx = first; idx < last; ++idx) {
    scanner.scan(letters);
    const auto values = scanner.values();
    const std::uint64_t c = *std::max_element(values.begin(), values.end());
    if (c > out.best) {
      out.best = c;
      out.count = 0;
      std::fill(out.lengths.begin(), out.lengths.end(), 0);
      out.maximal.clear();
    }
    if (c == out.best) {
      ++out.count;
      for (std::size_t len = 1; len <= n; ++len) {
        if (values[len - 1] == c) out.lengths[len] = 1;
      }
      if (keep_words) out.maximal.push_back(idx);
    }
    // Odometer increment, last letter fastest: lexicographic order.
    for (std::size_t i = n; i-- > 0;) {
      if (++letters[i] < q) break;
      letters[i] = 0;
    }
  }
  return out;
}

Word word_at_index(unsigned q, std::size_t n, std::uint64_t idx) {
  std::vector<Symbol> letters(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    letters[i] = static_cast<Symbol>(idx % q);
    idx /= q;
  }
  return Word(Alphabet(q), std::move(letters));
}

}  // namespace

GlobalStats brute_force_stats(unsigned q, std::uint64_t N, const WordSink& emit,
                              const BruteForceOptions& options) {
  if (q < 1) throw DomainError("brute force needs q >= 1");
  if (N < 1) throw DomainError("brute force needs N >= 1");
  const auto total = try_pow(q, N);
  if (!total || *total > options.budget) {
    throw BudgetExceeded("brute force: " + std::to_string(q) + "^" + std::to_string(N) +
                         " words exceeds the enumeration budget of " +
                         std::to_string(options.budget) + " words");
  }
  // Window codes need q^N < 2^64, which the budget guarantees for q >= 2.
  const auto n = static_cast<std::size_t>(N);
  const bool keep_words = static_cast<bool>(emit);

  const unsigned threads = resolve_threads(options.threads);
  const std::uint64_t chunks = std::min<std::uint64_t>(*total, std::uint64_t{threads} * 16);
  std::vector<PartialStats> partials(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t first = *total / chunks * c + std::min(c, *total % chunks);
      const std::uint64_t size = *total / chunks + (c < *total % chunks ? 1 : 0);
      partials[c] = scan_range(q, n, first, first + size, keep_words);
    }
  };
  if (threads == 1 || chunks == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  PartialStats merged;
  merged.lengths.assign(n + 1, 0);
  for (auto& p : partials) merged.merge(std::move(p));

  GlobalStats s;
  s.q = q;
  s.N = N;
  s.K = merged.best;
  for (std::size_t len = 1; len <= n; ++len) {
    if (merged.lengths[len]) s.R.push_back(len);
  }
  s.M = BigCount(merged.count);
  s.method = Method::brute;
  if (keep_words) {
    for (std::uint64_t idx : merged.maximal) emit(word_at_index(q, n, idx));
  }
  return s;
}

}  // namespace subword
