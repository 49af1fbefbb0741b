#include "subword/word.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>
#include <utility>

#include "subword/count.hpp"
#include "subword/errors.hpp"

namespace subword {

namespace {

constexpr std::string_view kLetters = "0123456789abcdefghijklmnopqrstuvwxyz";

std::vector<Symbol> parse_letters(std::string_view letters) {
  std::vector<Symbol> symbols;
  symbols.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    int v = letter_value(letters[i]);
    if (v < 0) {
      throw DomainError("invalid character '" + std::string(1, letters[i]) + "' at position " +
                        std::to_string(i));
    }
    symbols.push_back(static_cast<Symbol>(v));
  }
  return symbols;
}

}  // namespace

Alphabet::Alphabet(unsigned size) : size_(size) {
  if (size == 0 || size > kMaxSize) {
    throw DomainError("alphabet size must be in 1.." + std::to_string(kMaxSize) + ", got " +
                      std::to_string(size));
  }
}

char Alphabet::render(Symbol symbol) const {
  if (!contains(symbol)) {
    throw DomainError("symbol " + std::to_string(symbol) + " not in alphabet of size " +
                      std::to_string(size_));
  }
  return kLetters[symbol];
}

int letter_value(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

Word::Word(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!alphabet_.contains(symbols_[i])) {
      throw DomainError("symbol " + std::to_string(symbols_[i]) + " at position " +
                        std::to_string(i) + " not in alphabet of size " +
                        std::to_string(alphabet_.size()));
    }
  }
}

Word Word::parse(std::string_view text) {
  if (text.starts_with("q=")) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw DomainError("missing ':' after q=<int> prefix");
    unsigned q = 0;
    auto digits = text.substr(2, colon - 2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw DomainError("invalid alphabet size '" + std::string(digits) + "'");
    }
    return parse(text.substr(colon + 1), q);
  }
  auto symbols = parse_letters(text);
  unsigned q = symbols.empty() ? 1u : *std::max_element(symbols.begin(), symbols.end()) + 1u;
  return Word(Alphabet(q), std::move(symbols));
}

Word Word::parse(std::string_view letters, unsigned q) {
  return Word(Alphabet(q), parse_letters(letters));
}

Word Word::factor(std::size_t pos, std::size_t length) const {
  if (pos > size() || length > size() - pos) throw DomainError("factor out of range");
  return Word(alphabet_, std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                             symbols_.begin() + static_cast<std::ptrdiff_t>(pos + length)));
}

Word Word::reversed() const { return Word(alphabet_, {symbols_.rbegin(), symbols_.rend()}); }

std::string Word::to_string() const {
  std::string out;
  out.reserve(size());
  for (Symbol s : symbols_) out.push_back(kLetters[s]);
  return out;
}

Word relabel(const Word& w, std::span<const Symbol> permutation) {
  if (permutation.size() != w.q()) throw DomainError("permutation size does not match alphabet");
  std::vector<bool> hit(w.q(), false);
  for (Symbol s : permutation) {
    if (s >= w.q() || hit[s]) throw DomainError("not a permutation of the alphabet");
    hit[s] = true;
  }
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (Symbol s : w.symbols()) out.push_back(permutation[s]);
  return Word(w.alphabet(), std::move(out));
}

std::uint64_t ComplexityProfile::at(std::size_t n) const {
  if (n == 0) throw DomainError("factor length must be positive");
  return n <= values.size() ? values[n - 1] : 0;
}

ComplexityProfile make_profile(std::vector<std::uint64_t> values) {
  ComplexityProfile p;
  p.values = std::move(values);
  if (p.values.empty()) return p;
  p.max_value = *std::max_element(p.values.begin(), p.values.end());
  for (std::size_t n = 1; n <= p.values.size(); ++n) {
    if (p.values[n - 1] == p.max_value) p.argmax_lengths.push_back(n);
  }
  return p;
}

std::set<Word> factor_set(const Word& w, std::size_t n) {
  if (n == 0) throw DomainError("factor length must be positive");
  std::set<Word> out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.factor(i, n));
  return out;
}

std::uint64_t factor_count(const Word& w, std::size_t n) {
  if (n == 0) throw DomainError("factor length must be positive");
  if (n > w.size()) return 0;
  const std::size_t windows = w.size() - n + 1;
  const auto symbols = w.symbols();
  const std::uint64_t q = w.q();

  // Base-q window codes when q^n fits in 64 bits (n * log2(q) <= 64).
  if (auto span = try_pow(q, n)) {
    const std::uint64_t high = *span / q;  // q^(n-1)
    std::vector<std::uint64_t> codes;
    codes.reserve(windows);
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i >= n) code %= high;
      code = code * q + symbols[i];
      if (i + 1 >= n) codes.push_back(code);
    }
    std::sort(codes.begin(), codes.end());
    return static_cast<std::uint64_t>(std::unique(codes.begin(), codes.end()) - codes.begin());
  }

  const std::string text = w.to_string();
  const std::string_view view = text;
  std::unordered_set<std::string_view> seen;
  seen.reserve(windows);
  for (std::size_t i = 0; i < windows; ++i) seen.insert(view.substr(i, n));
  return seen.size();
}

namespace {

// Prefix doubling; O(N log^2 N).
std::vector<std::size_t> suffix_array(std::span<const Symbol> s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> sa(n), rank(n), next(n);
  for (std::size_t i = 0; i < n; ++i) {
    sa[i] = i;
    rank[i] = s[i];
  }
  for (std::size_t gap = 1;; gap <<= 1) {
    auto key = [&](std::size_t i) {
      return std::pair{rank[i], i + gap < n ? std::int64_t(rank[i + gap]) : std::int64_t{-1}};
    };
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    next[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) next[sa[i]] = next[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]));
    rank.swap(next);
    if (rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

// lcp[i] = longest common prefix of suffixes sa[i-1] and sa[i]; lcp[0] = 0 (Kasai).
std::vector<std::size_t> lcp_array(std::span<const Symbol> s, const std::vector<std::size_t>& sa) {
  const std::size_t n = s.size();
  std::vector<std::size_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = i;
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace

ComplexityProfile complexity_profile(const Word& w) {
  if (w.empty()) throw DomainError("empty word has no profile");
  const auto s = w.symbols();
  const std::size_t N = s.size();
  const auto sa = suffix_array(s);
  const auto lcp = lcp_array(s, sa);
  // Suffix sa[i] starts a new factor of every length in (lcp[i], N - sa[i]].
  std::vector<std::int64_t> delta(N + 2, 0);
  for (std::size_t i = 0; i < N; ++i) {
    ++delta[lcp[i] + 1];
    --delta[N - sa[i] + 1];
  }
  std::vector<std::uint64_t> values(N);
  std::int64_t running = 0;
  for (std::size_t n = 1; n <= N; ++n) {
    running += delta[n];
    values[n - 1] = static_cast<std::uint64_t>(running);
  }
  return make_profile(std::move(values));
}

std::uint64_t max_complexity(const Word& w) { return complexity_profile(w).max_value; }

}  // namespace subword
