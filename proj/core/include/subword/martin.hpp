#pragma once

#include <cstdint>

#include "subword/word.hpp"

namespace subword {

/// Greedy "prefer largest" de Bruijn word: k-1 zeros, then repeatedly the
/// largest letter whose new length-k suffix has not been seen, until stuck.
/// The result has length q^k + k - 1 and contains every length-k word once.
///
/// `budget` caps q^k (the size of the seen-window table).
Word martin_word(unsigned q, unsigned k, std::uint64_t budget = std::uint64_t{1} << 28);

/// A length-N word with C(w) = K(N):
///   - q == 1: N zeros;
///   - N <= q: N distinct letters (a prefix of martin_word(q, 1));
///   - otherwise, with k from bracket_k(q, N), the first N letters of
///     martin_word(q, k + 1). Its maximum sits at factor length k + 1.
Word extended_martin_word(unsigned q, std::uint64_t N,
                          std::uint64_t budget = std::uint64_t{1} << 28);

/// martin_word(q, k) followed by one `extra` letter. Length q^k + k, and the
/// maximum is attained at both k and k + 1.
Word appended_martin_word(unsigned q, unsigned k, Symbol extra,
                          std::uint64_t budget = std::uint64_t{1} << 28);

}  // namespace subword
