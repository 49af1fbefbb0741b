#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subword/global_complexity.hpp"
#include "subword/word.hpp"

namespace subword {

/// The de Bruijn tree T(q,w): rooted at the length-m word w; a node x1..xm
/// has as children the words x2..xm e, in ascending e, that are not already
/// on the path from the root. Every branch is a maximal path of B(q,m)
/// starting at w.
class DeBruijnTree {
 public:
  struct Node {
    Word word;
    std::size_t level = 0;
    std::vector<std::size_t> children;  // indices into nodes()
  };

  const Word& root() const noexcept { return nodes_.front().word; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }

  /// levels()[d] = number of nodes at depth d (root at depth 0).
  const std::vector<std::uint64_t>& levels() const noexcept { return levels_; }
  std::size_t depth() const noexcept { return levels_.size() - 1; }

  /// Set when the tree was built with a level limit.
  std::optional<std::size_t> max_level() const noexcept { return max_level_; }

  /// Nodes at `level`. Throws DomainError past a truncation limit; zero past
  /// the depth of a complete tree.
  std::uint64_t level_count(std::size_t level) const;

 private:
  friend struct TreeBuilder;
  std::vector<Node> nodes_;
  std::vector<std::uint64_t> levels_;
  std::optional<std::size_t> max_level_;
};

struct TreeOptions {
  std::optional<std::size_t> max_level;
  std::uint64_t node_cap = 100000;  // materialized nodes
};

/// Materializes T(q, root). Throws BudgetExceeded past `node_cap` nodes.
DeBruijnTree build_tree(const Word& root, const TreeOptions& options = {});

/// Per-level node counts of T(q, root) by streaming DFS, without
/// materializing the tree. `vertex_budget` caps q^m.
std::vector<std::uint64_t> tree_level_counts(const Word& root,
                                             std::optional<std::size_t> max_level = {},
                                             std::uint64_t vertex_budget = 64);

struct TreeCountOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  std::uint64_t vertex_budget = 64;
};

/// M(N) as the number of nodes at level N-k-1 over all trees T(q,w), w in A^(k+1).
GlobalStats m_via_trees(unsigned q, std::uint64_t N, const TreeCountOptions& options = {});

/// DOT rendering; children appear in ascending letter order.
std::string tree_to_dot(const DeBruijnTree& tree);

}  // namespace subword
