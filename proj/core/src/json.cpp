#include "subword/json.hpp"

#include <json.hpp>

#include "subword/errors.hpp"

namespace subword {

namespace {

nlohmann::ordered_json stats_object(const GlobalStats& s) {
  nlohmann::ordered_json j;
  j["q"] = s.q;
  j["N"] = s.N;
  j["K"] = s.K;
  j["R"] = s.R;
  j["M"] = s.M ? nlohmann::ordered_json(to_decimal(*s.M)) : nlohmann::ordered_json(nullptr);
  j["method"] = std::string(to_string(s.method));
  return j;
}

}  // namespace

std::string to_json(const GlobalStats& stats) { return stats_object(stats).dump(); }

GlobalStats stats_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    GlobalStats s;
    s.q = j.at("q").get<unsigned>();
    s.N = j.at("N").get<std::uint64_t>();
    s.K = j.at("K").get<std::uint64_t>();
    s.R = j.at("R").get<std::vector<std::uint64_t>>();
    const auto& m = j.at("M");
    if (!m.is_null()) s.M = parse_decimal(m.get<std::string>());
    const auto method = parse_method(j.at("method").get<std::string>());
    if (!method) throw DomainError("unknown method '" + j.at("method").get<std::string>() + "'");
    s.method = *method;
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid stats JSON: ") + e.what());
  }
}

std::string to_json(const Word& w, const ComplexityProfile& profile) {
  nlohmann::ordered_json j;
  j["word"] = w.to_string();
  j["q"] = w.q();
  j["N"] = w.size();
  j["f"] = profile.values;
  j["C"] = profile.max_value;
  j["argmax"] = profile.argmax_lengths;
  return j.dump();
}

}  // namespace subword
