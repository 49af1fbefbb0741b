#include "subword/martin.hpp"

#include <vector>

#include "subword/count.hpp"
#include "subword/errors.hpp"
#include "subword/global_complexity.hpp"

namespace subword {

Word martin_word(unsigned q, unsigned k, std::uint64_t budget) {
  if (q < 2) throw DomainError("martin_word needs q >= 2");
  if (q > Alphabet::kMaxSize) throw DomainError("martin_word: q exceeds the renderable alphabet");
  if (k < 1) throw DomainError("martin_word needs k >= 1");
  const auto windows = try_pow(q, k);
  if (!windows || *windows > budget) {
    throw BudgetExceeded("martin_word: q^k exceeds the window budget of " +
                         std::to_string(budget));
  }
  // q^(k-1): dropping the oldest letter of a window is `code % high`.
  const std::uint64_t high = *windows / q;
  std::vector<bool> seen(*windows, false);
  std::vector<Symbol> letters(k - 1, 0);
  letters.reserve(*windows + k - 1);

  // Code of the last k-1 letters; zero for the initial run of zeros.
  std::uint64_t context = 0;
  for (;;) {
    bool extended = false;
    for (unsigned s = q; s-- > 0;) {
      const std::uint64_t window = context * q + s;
      if (!seen[window]) {
        seen[window] = true;
        letters.push_back(static_cast<Symbol>(s));
        context = window % high;
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  return Word(Alphabet(q), std::move(letters));
}

Word extended_martin_word(unsigned q, std::uint64_t N, std::uint64_t budget) {
  if (N < 1) throw DomainError("extended_martin_word needs N >= 1");
  if (q == 1) return Word(Alphabet(1), std::vector<Symbol>(N, 0));
  if (N <= q) return martin_word(q, 1, budget).factor(0, N);
  const Bracket b = bracket_k(q, N);
  return martin_word(q, b.k + 1, budget).factor(0, N);
}

Word appended_martin_word(unsigned q, unsigned k, Symbol extra, std::uint64_t budget) {
  Word base = martin_word(q, k, budget);
  if (extra >= q) throw DomainError("appended letter not in alphabet");
  std::vector<Symbol> letters(base.symbols().begin(), base.symbols().end());
  letters.push_back(extra);
  return Word(base.alphabet(), std::move(letters));
}

}  // namespace subword
