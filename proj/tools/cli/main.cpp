#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_budget_flags(CLI::App* cmd, subword::cli::Budgets& budgets) {
  cmd->add_option("--brute-budget", budgets.brute, "Largest q^N enumerated by brute force")
      ->capture_default_str();
  cmd->add_option("--graph-budget", budgets.graph,
                  "Largest de Bruijn graph (vertices) searched for paths")
      ->capture_default_str();
  cmd->add_option("--threads", budgets.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace subword::cli;

  CLI::App app{"Subword complexity of finite words and global maximal complexity K(N), R(N), M(N)"};
  app.require_subcommand(1);

  Budgets budgets;
  std::string format_name = "text";
  std::string methods = "all";
  unsigned q = 2;
  std::uint64_t n = 0;
  unsigned k = 0;
  bool json = false;
  int status = 0;

  auto resolve_format = [&]() -> Format {
    if (json) return Format::json;
    if (auto f = parse_format(format_name)) return *f;
    throw CLI::ValidationError("--format", "expected text, csv or json");
  };

  auto* complexity = app.add_subcommand("complexity", "Subword complexity profile of a word");
  std::string word;
  complexity->add_option("word", word, "Word, optionally prefixed by q=<int>:")->required();
  complexity->add_flag("--json", json, "JSON output");
  complexity->callback([&] { status = cmd_complexity(word, json, std::cout, std::cerr); });

  auto* stats = app.add_subcommand("stats", "K(N), R(N), M(N) for one length");
  stats->add_option("--q", q, "Alphabet size")->required();
  stats->add_option("--n", n, "Word length")->required();
  stats->add_option("--method", methods, "closed|brute|graph|tree|formula|all or a comma list")
      ->capture_default_str();
  stats->add_option("--format", format_name, "text|json")->capture_default_str();
  stats->add_flag("--json", json, "Same as --format json");
  stats->add_option("--checkpoint-dir", budgets.checkpoint_dir,
                    "Directory for resumable path-count ledgers");
  add_budget_flags(stats, budgets);
  stats->callback([&] {
    status = cmd_stats(q, n, methods, resolve_format(), budgets, std::cout, std::cerr);
  });

  auto* table = app.add_subcommand("table", "Tabulate K, R, M for N = 1..max");
  table->add_option("--q", q, "Alphabet size")->required();
  std::uint64_t n_max = 0;
  table->add_option("--max", n_max, "Largest N")->required();
  table->add_option("--method", methods, "Methods to cross-check")->capture_default_str();
  table->add_option("--format", format_name, "text|csv|json")->capture_default_str();
  table->add_flag("--json", json, "Same as --format json");
  table->add_option("--checkpoint-dir", budgets.checkpoint_dir,
                    "Directory for resumable path-count ledgers");
  add_budget_flags(table, budgets);
  table->callback([&] {
    status = cmd_table(q, n_max, methods, resolve_format(), budgets, std::cout, std::cerr);
  });

  auto* martin = app.add_subcommand("martin", "Greedy prefer-largest de Bruijn word");
  martin->add_option("--q", q, "Alphabet size")->required();
  std::optional<unsigned> martin_k;
  std::optional<std::uint64_t> martin_n;
  std::optional<unsigned> append;
  martin->add_option("--k", martin_k, "Order: word of length q^k+k-1");
  martin->add_option("--n", martin_n, "Length: a word attaining K(N)");
  martin->add_option("--append", append, "With --k: append this letter");
  martin->callback([&] {
    status = cmd_martin(q, martin_k, martin_n, append, std::cout, std::cerr);
  });

  auto* enumerate = app.add_subcommand("enumerate", "Every word of length N with C(w) = K(N)");
  enumerate->add_option("--q", q, "Alphabet size")->required();
  enumerate->add_option("--n", n, "Word length")->required();
  add_budget_flags(enumerate, budgets);
  enumerate->callback([&] { status = cmd_enumerate(q, n, budgets, std::cout, std::cerr); });

  auto* graph_dot = app.add_subcommand("graph-dot", "DOT rendering of B(q,k)");
  graph_dot->add_option("--q", q, "Alphabet size")->required();
  graph_dot->add_option("--k", k, "Vertex word length")->required();
  graph_dot->callback([&] { status = cmd_graph_dot(q, k, std::cout, std::cerr); });

  auto* tree = app.add_subcommand("tree", "Level counts or DOT of the de Bruijn tree T(q,root)");
  std::string root;
  std::optional<std::size_t> max_level;
  bool dot = false;
  std::uint64_t node_cap = 100000;
  std::optional<unsigned> tree_q;
  tree->add_option("--root", root, "Root word, optionally prefixed by q=<int>:")->required();
  tree->add_option("--q", tree_q, "Alphabet size (default: largest letter + 1)");
  tree->add_option("--max-level", max_level, "Truncate at this depth");
  tree->add_flag("--dot", dot, "Materialize and print DOT");
  tree->add_option("--node-cap", node_cap, "Node cap for --dot")->capture_default_str();
  add_budget_flags(tree, budgets);
  tree->callback([&] {
    status = cmd_tree(root, tree_q, max_level, dot, node_cap, budgets, std::cout, std::cerr);
  });

  auto* euler = app.add_subcommand("euler", "Eulerian circuit of B(q,k) as arc words");
  euler->add_option("--q", q, "Alphabet size")->required();
  euler->add_option("--k", k, "Vertex word length")->required();
  euler->callback([&] { status = cmd_euler(q, k, std::cout, std::cerr); });

  auto* hamiltonian = app.add_subcommand("hamiltonian", "Count Hamiltonian cycles of B(q,k)");
  hamiltonian->add_option("--q", q, "Alphabet size")->required();
  hamiltonian->add_option("--k", k, "Vertex word length")->required();
  hamiltonian->callback([&] { status = cmd_hamiltonian(q, k, std::cout, std::cerr); });

  auto* formulas = app.add_subcommand("formulas", "Check M at de Bruijn lengths against enumeration");
  unsigned max_k = 3;
  formulas->add_option("--q", q, "Alphabet size")->required();
  formulas->add_option("--max-k", max_k, "Largest order k")->capture_default_str();
  add_budget_flags(formulas, budgets);
  formulas->callback([&] { status = cmd_formulas(q, max_k, budgets, std::cout, std::cerr); });

  CLI11_PARSE(app, argc, argv);
  return status;
}
