#pragma once

#include <string>
#include <string_view>

#include "subword/global_complexity.hpp"
#include "subword/word.hpp"

namespace subword {

/// {"q":int,"N":int,"K":int,"R":[int...],"M":"<decimal>"|null,"method":string}
std::string to_json(const GlobalStats& stats);

/// Inverse of to_json(GlobalStats). Throws DomainError on schema violations.
GlobalStats stats_from_json(std::string_view text);

/// {"word":string,"q":int,"N":int,"f":[int...],"C":int,"argmax":[int...]}
std::string to_json(const Word& w, const ComplexityProfile& profile);

}  // namespace subword
