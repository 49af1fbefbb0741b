#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subword/count.hpp"
#include "subword/errors.hpp"
#include "subword/global_complexity.hpp"

namespace subword::cli {

struct Budgets {
  std::uint64_t brute = std::uint64_t{1} << 26;  // words
  std::uint64_t graph = 64;                      // vertices of B(q,k+1)
  unsigned threads = 0;
  std::filesystem::path checkpoint_dir;  // empty = no checkpointing
};

enum class Format { text, csv, json };
std::optional<Format> parse_format(std::string_view name);

/// "all" or a comma-separated list of method names.
std::vector<Method> parse_methods(std::string_view list);

struct Skipped {
  Method method;
  std::string reason;
};

struct MethodRun {
  std::vector<GlobalStats> results;
  std::vector<Skipped> skipped;
};

/// Runs each method on (q, N). Inapplicable or over-budget methods are
/// recorded as skipped, or rethrown when `strict`.
MethodRun run_methods(unsigned q, std::uint64_t N, const std::vector<Method>& methods,
                      const Budgets& budgets, bool strict);

struct TableRow {
  unsigned q = 0;
  std::uint64_t N = 0;
  std::uint64_t K = 0;
  std::vector<std::uint64_t> R;
  std::optional<BigCount> M;
  std::vector<Method> methods_agreed;
  std::vector<Skipped> skipped;
};

/// Thrown when methods disagree; what() lists every method's values.
class Disagreement : public Error {
 public:
  using Error::Error;
};

/// Checks that all results agree on K and R, and on M where M is known.
TableRow reconcile(unsigned q, std::uint64_t N, const MethodRun& run);

std::vector<TableRow> build_table(unsigned q, std::uint64_t n_max, std::vector<Method> methods,
                                  const Budgets& budgets);

std::string format_set(const std::vector<std::uint64_t>& values);  // {1,2}
std::string format_table(const std::vector<TableRow>& rows, Format format);

// Commands write results to `out` and diagnostics to `err`, returning the
// process exit code: 0 success, 1 usage/domain/budget error, 2 disagreement.
int cmd_complexity(std::string_view word, bool json, std::ostream& out, std::ostream& err);
int cmd_stats(unsigned q, std::uint64_t N, std::string_view methods, Format format,
              const Budgets& budgets, std::ostream& out, std::ostream& err);
int cmd_table(unsigned q, std::uint64_t n_max, std::string_view methods, Format format,
              const Budgets& budgets, std::ostream& out, std::ostream& err);
int cmd_martin(unsigned q, std::optional<unsigned> k, std::optional<std::uint64_t> N,
               std::optional<unsigned> append, std::ostream& out, std::ostream& err);
int cmd_enumerate(unsigned q, std::uint64_t N, const Budgets& budgets, std::ostream& out,
                  std::ostream& err);
int cmd_graph_dot(unsigned q, unsigned k, std::ostream& out, std::ostream& err);
int cmd_tree(std::string_view root, std::optional<unsigned> q, std::optional<std::size_t> max_level,
             bool dot,
             std::uint64_t node_cap, const Budgets& budgets, std::ostream& out, std::ostream& err);
int cmd_euler(unsigned q, unsigned k, std::ostream& out, std::ostream& err);
int cmd_hamiltonian(unsigned q, unsigned k, std::ostream& out, std::ostream& err);
int cmd_formulas(unsigned q, unsigned max_k, const Budgets& budgets, std::ostream& out,
                 std::ostream& err);

}  // namespace subword::cli
