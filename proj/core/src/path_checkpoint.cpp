#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "subword/debruijn_graph.hpp"
#include "subword/errors.hpp"

namespace subword {

namespace {

std::optional<std::uint64_t> parse_field(std::string_view& line, std::string_view key) {
  if (!line.starts_with(key)) return std::nullopt;
  line.remove_prefix(key.size());
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
  if (ec != std::errc{} || ptr == line.data()) return std::nullopt;
  line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
  return value;
}

std::optional<CheckpointEntry> parse_line(std::string_view line) {
  auto vertex = parse_field(line, "vertex=");
  if (!vertex) return std::nullopt;
  auto count = parse_field(line, " count=");
  if (!count || line != " done") return std::nullopt;
  return CheckpointEntry{*vertex, *count};
}

}  // namespace

std::string format_checkpoint_line(const CheckpointEntry& e) {
  return "vertex=" + std::to_string(e.vertex) + " count=" + std::to_string(e.count) + " done";
}

std::vector<CheckpointEntry> read_checkpoint(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return {};
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  in.close();

  // Drop an interrupted trailing write so later appends start on a fresh line.
  const auto complete = content.rfind('\n');
  const std::size_t keep = complete == std::string::npos ? 0 : complete + 1;
  if (keep != content.size()) std::filesystem::resize_file(file, keep);

  std::map<Vertex, std::uint64_t> seen;
  std::vector<CheckpointEntry> entries;
  std::string_view rest(content.data(), keep);
  std::size_t line_no = 0;
  while (!rest.empty()) {
    const auto eol = rest.find('\n');
    const std::string_view line = rest.substr(0, eol);
    rest.remove_prefix(eol + 1);
    ++line_no;
    auto entry = parse_line(line);
    if (!entry) {
      throw DomainError("malformed checkpoint line " + std::to_string(line_no) + ": '" +
                        std::string(line) + "'");
    }
    auto [it, inserted] = seen.emplace(entry->vertex, entry->count);
    if (!inserted) {
      if (it->second != entry->count) {
        throw DomainError("checkpoint has conflicting counts for vertex " +
                          std::to_string(entry->vertex));
      }
      continue;
    }
    entries.push_back(*entry);
  }
  return entries;
}

}  // namespace subword
