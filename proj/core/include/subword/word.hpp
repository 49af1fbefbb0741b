#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subword {

using Symbol = std::uint8_t;

/// A q-letter alphabet. Letters are the integers 0..q-1 in their natural
/// order and render as 0-9 then a-z, which is where the cap of 36 comes from.
class Alphabet {
 public:
  static constexpr unsigned kMaxSize = 36;

  explicit Alphabet(unsigned size);

  unsigned size() const noexcept { return size_; }
  bool contains(unsigned symbol) const noexcept { return symbol < size_; }

  /// Character for a letter; throws DomainError if the letter is not in the alphabet.
  char render(Symbol symbol) const;

  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

 private:
  unsigned size_;
};

/// Digit/lowercase value of a rendered letter, or -1 if `c` is not one.
int letter_value(char c) noexcept;

/// A finite word over an Alphabet. Immutable once constructed.
class Word {
 public:
  /// The empty word over the one-letter alphabet.
  Word() : alphabet_(1) {}
  Word(Alphabet alphabet, std::vector<Symbol> symbols);

  /// Parses the text format: an optional "q=<int>:" prefix followed by
  /// characters from 0-9a-z. Without a prefix q is (largest letter + 1), or
  /// 1 for the empty word.
  static Word parse(std::string_view text);

  /// Same as parse but with an explicit alphabet size.
  static Word parse(std::string_view letters, unsigned q);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  unsigned q() const noexcept { return alphabet_.size(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

  /// Contiguous block of `length` letters starting at `pos`.
  Word factor(std::size_t pos, std::size_t length) const;
  Word reversed() const;

  /// Letters only, no "q=" prefix.
  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

/// Applies a letter permutation: letter s becomes permutation[s].
Word relabel(const Word& w, std::span<const Symbol> permutation);

/// f_w(1..N) together with its maximum C(w) and the lengths attaining it.
struct ComplexityProfile {
  std::vector<std::uint64_t> values;  // values[n - 1] = f_w(n)
  std::uint64_t max_value = 0;
  std::vector<std::size_t> argmax_lengths;  // ascending

  /// f_w(n); zero for n > N.
  std::uint64_t at(std::size_t n) const;

  friend bool operator==(const ComplexityProfile&, const ComplexityProfile&) = default;
};

/// Builds a profile (max and argmax) from raw counts f(1..N).
ComplexityProfile make_profile(std::vector<std::uint64_t> values);

/// F_n(w): the distinct length-n factors. Empty when n > |w|.
std::set<Word> factor_set(const Word& w, std::size_t n);

/// |F_n(w)| without materializing the factors.
std::uint64_t factor_count(const Word& w, std::size_t n);

/// Throws DomainError("empty word has no profile") for the empty word.
ComplexityProfile complexity_profile(const Word& w);

/// C(w).
std::uint64_t max_complexity(const Word& w);

}  // namespace subword
