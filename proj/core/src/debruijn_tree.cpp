#include "subword/debruijn_tree.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "subword/count.hpp"
#include "subword/errors.hpp"

namespace subword {

namespace {

using Letters = std::vector<Symbol>;

bool on_path(const std::vector<Letters>& path, const Letters& candidate) {
  return std::find(path.begin(), path.end(), candidate) != path.end();
}

Letters shifted(const Letters& node, Symbol letter) {
  Letters next(node.begin() + 1, node.end());
  next.push_back(letter);
  return next;
}

void check_root(const Word& root, std::uint64_t vertex_budget) {
  if (root.empty()) throw DomainError("de Bruijn tree root must be nonempty");
  const auto vertices = try_pow(root.q(), root.size());
  if (!vertices || *vertices > vertex_budget) {
    throw BudgetExceeded("tree over B(" + std::to_string(root.q()) + "," +
                         std::to_string(root.size()) + ") exceeds the vertex budget of " +
                         std::to_string(vertex_budget));
  }
}

void count_levels(unsigned q, std::vector<Letters>& path, std::optional<std::size_t> max_level,
                  std::vector<std::uint64_t>& levels) {
  const std::size_t level = path.size() - 1;
  if (levels.size() <= level) levels.resize(level + 1, 0);
  levels[level] = checked_add(levels[level], 1);
  if (max_level && level == *max_level) return;
  for (unsigned e = 0; e < q; ++e) {
    Letters child = shifted(path.back(), static_cast<Symbol>(e));
    if (on_path(path, child)) continue;
    path.push_back(std::move(child));
    count_levels(q, path, max_level, levels);
    path.pop_back();
  }
}

}  // namespace

std::uint64_t DeBruijnTree::level_count(std::size_t level) const {
  if (max_level_ && level > *max_level_) {
    throw DomainError("level " + std::to_string(level) + " is beyond the built depth " +
                      std::to_string(*max_level_));
  }
  return level < levels_.size() ? levels_[level] : 0;
}

struct TreeBuilder {
  TreeBuilder(const Word& root, const TreeOptions& opts) : options(opts) {
    tree.max_level_ = options.max_level;
    tree.nodes_.push_back({root, 0, {}});
    tree.levels_.push_back(1);
    path.emplace_back(root.symbols().begin(), root.symbols().end());
  }

  const TreeOptions& options;
  DeBruijnTree tree;
  std::vector<Letters> path;

  void expand(std::size_t index) {
    const std::size_t level = tree.nodes_[index].level;
    if (options.max_level && level == *options.max_level) return;
    const unsigned q = tree.nodes_[index].word.q();
    for (unsigned e = 0; e < q; ++e) {
      Letters child = shifted(path.back(), static_cast<Symbol>(e));
      if (on_path(path, child)) continue;
      if (tree.nodes_.size() >= options.node_cap) {
        throw BudgetExceeded("de Bruijn tree exceeds the node cap of " +
                             std::to_string(options.node_cap) + "; set a max level");
      }
      const std::size_t child_index = tree.nodes_.size();
      tree.nodes_.push_back({Word(tree.root().alphabet(), child), level + 1, {}});
      tree.nodes_[index].children.push_back(child_index);
      if (tree.levels_.size() <= level + 1) tree.levels_.resize(level + 2, 0);
      ++tree.levels_[level + 1];
      path.push_back(std::move(child));
      expand(child_index);
      path.pop_back();
    }
  }
};

DeBruijnTree build_tree(const Word& root, const TreeOptions& options) {
  if (root.empty()) throw DomainError("de Bruijn tree root must be nonempty");
  if (options.node_cap < 1) throw BudgetExceeded("node cap must allow the root");
  TreeBuilder builder(root, options);
  builder.expand(0);
  return std::move(builder.tree);
}

std::vector<std::uint64_t> tree_level_counts(const Word& root, std::optional<std::size_t> max_level,
                                             std::uint64_t vertex_budget) {
  check_root(root, vertex_budget);
  std::vector<Letters> path{Letters(root.symbols().begin(), root.symbols().end())};
  std::vector<std::uint64_t> levels;
  count_levels(root.q(), path, max_level, levels);
  return levels;
}

GlobalStats m_via_trees(unsigned q, std::uint64_t N, const TreeCountOptions& options) {
  const Bracket b = bracket_k(q, N);
  const unsigned m = b.k + 1;
  const std::size_t level = N - b.k - 1;
  const auto roots = try_pow(q, m);
  if (!roots || *roots > options.vertex_budget) {
    throw BudgetExceeded("trees over B(" + std::to_string(q) + "," + std::to_string(m) +
                         ") exceed the vertex budget of " + std::to_string(options.vertex_budget));
  }

  // Roots are all of A^m, generated as a lexicographic odometer.
  std::vector<Word> all_roots;
  all_roots.reserve(*roots);
  Letters letters(m, 0);
  for (std::uint64_t i = 0; i < *roots; ++i) {
    all_roots.emplace_back(Alphabet(q), letters);
    for (std::size_t j = m; j-- > 0;) {
      if (++letters[j] < q) break;
      letters[j] = 0;
    }
  }

  std::vector<std::uint64_t> per_root(all_roots.size(), 0);
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < all_roots.size(); i = next++) {
        const auto levels = tree_level_counts(all_roots[i], level, options.vertex_budget);
        per_root[i] = level < levels.size() ? levels[level] : 0;
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  const unsigned threads = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_threads(options.threads), all_roots.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::uint64_t total = 0;
  for (std::uint64_t c : per_root) total = checked_add(total, c);
  return GlobalStats{q, N, global_K(q, N), global_R(q, N), BigCount(total), Method::tree};
}

std::string tree_to_dot(const DeBruijnTree& tree) {
  std::ostringstream out;
  out << "digraph \"T(" << tree.root().q() << "," << tree.root().to_string() << ")\" {\n";
  const auto& nodes = tree.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << nodes[i].word.to_string() << "\"];\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t c : nodes[i].children) out << "  n" << i << " -> n" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace subword
