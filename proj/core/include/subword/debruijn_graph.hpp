#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subword/global_complexity.hpp"
#include "subword/word.hpp"

namespace subword {

/// A vertex of B(q,k): a length-k word in base q, first letter most significant.
using Vertex = std::uint64_t;

/// An arc of B(q,k): the (k+1)-word x1..xk yk, encoded the same way. It is
/// also a vertex of B(q,k+1).
using Arc = std::uint64_t;

/// The de Bruijn graph B(q,k). Vertices are implicit: the successor of v on
/// letter s is (v mod q^(k-1)) * q + s, so each vertex has in- and outdegree q.
class DeBruijnGraph {
 public:
  /// Throws BudgetExceeded when q^(k+1) arcs exceed `budget`.
  DeBruijnGraph(unsigned q, unsigned k, std::uint64_t budget = std::uint64_t{1} << 24);

  unsigned q() const noexcept { return q_; }
  unsigned k() const noexcept { return k_; }
  std::uint64_t vertex_count() const noexcept { return vertices_; }
  std::uint64_t arc_count() const noexcept { return vertices_ * q_; }

  Vertex successor(Vertex v, Symbol s) const noexcept { return (v % high_) * q_ + s; }
  Arc arc(Vertex from, Symbol s) const noexcept { return from * q_ + s; }
  Vertex arc_source(Arc a) const noexcept { return a / q_; }
  Vertex arc_target(Arc a) const noexcept { return a % vertices_; }
  bool has_arc(Vertex from, Vertex to) const noexcept { return to / q_ == from % high_; }

  Word vertex_word(Vertex v) const;
  Word arc_word(Arc a) const;
  /// Throws DomainError unless `w` has length k over q letters.
  Vertex vertex_of(const Word& w) const;

 private:
  unsigned q_;
  unsigned k_;
  std::uint64_t vertices_;  // q^k
  std::uint64_t high_;      // q^(k-1)
};

/// A walk with distinct vertices in B(q,k). Length is the number of arcs.
struct GraphPath {
  unsigned q = 0;
  unsigned k = 0;
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const GraphPath&, const GraphPath&) = default;
};

/// The first vertex's k letters followed by the last letter of every later
/// vertex. Throws DomainError for empty paths, missing arcs, or repeated vertices.
Word word_of_path(const GraphPath& path);

/// The length-k windows of `w` as a path in B(q,k), q taken from the word.
/// Throws DomainError("word revisits vertex; not a path") on a repeated window.
GraphPath path_of_word(const Word& w, unsigned k);

struct PathCountOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  /// Resumable ledger of per-start-vertex subtotals; empty = none.
  std::filesystem::path checkpoint;
  /// Stop after this many start vertices have been counted in this call.
  std::optional<std::uint64_t> max_new_vertices;
  /// Largest B(q,m) (in vertices) the counter will search.
  std::uint64_t vertex_budget = 64;
};

struct PathCountResult {
  std::uint64_t total = 0;  // sum over completed start vertices
  std::uint64_t vertices_done = 0;
  std::uint64_t vertices_resumed = 0;  // taken from the checkpoint
  bool complete = false;
};

/// Distinct-vertex paths with exactly `length` arcs in B(q,m), summed over
/// all start vertices, by DFS with a visited set. Subtotals are appended to
/// the checkpoint ledger as they finish; an existing ledger is resumed.
PathCountResult count_paths_resumable(unsigned q, unsigned m, std::uint64_t length,
                                      const PathCountOptions& options = {});

/// count_paths_resumable without a stop condition; returns the total.
std::uint64_t count_paths(unsigned q, unsigned m, std::uint64_t length,
                          const PathCountOptions& options = {});

/// Distinct-vertex paths with exactly `length` arcs starting at `start`.
std::uint64_t count_paths_from(const DeBruijnGraph& g, Vertex start, std::uint64_t length);

/// M(N) as the number of paths of length N-k-1 in B(q,k+1); K and R by closed form.
GlobalStats m_via_graph(unsigned q, std::uint64_t N, const PathCountOptions& options = {});

/// Streams the word of every path counted by m_via_graph, ordered by start
/// vertex then ascending letter, which is lexicographic. Returns how many.
std::uint64_t enumerate_max_words(unsigned q, std::uint64_t N, const WordSink& sink,
                                  std::uint64_t vertex_budget = 64);

/// Eulerian circuit from vertex 0 by Hierholzer's algorithm, taking the
/// smallest unused outgoing arc first. The arc sequence, read as vertices of
/// B(q,k+1), is a Hamiltonian path there.
std::vector<Arc> eulerian_circuit(const DeBruijnGraph& g);

/// Directed Hamiltonian cycles, each counted once. Needs q^k <= 32.
std::uint64_t count_hamiltonian_cycles(const DeBruijnGraph& g);

/// DOT digraph: vertices named by their words, arcs labelled by (k+1)-words.
std::string graph_to_dot(const DeBruijnGraph& g);

// Checkpoint ledger. One line per finished start vertex:
//   vertex=<int> count=<int> done
struct CheckpointEntry {
  Vertex vertex = 0;
  std::uint64_t count = 0;
  friend bool operator==(const CheckpointEntry&, const CheckpointEntry&) = default;
};

std::string format_checkpoint_line(const CheckpointEntry& e);

/// Reads a ledger. A missing file is empty; a trailing line without a newline
/// (an interrupted write) is ignored. Malformed complete lines or conflicting
/// entries throw DomainError.
std::vector<CheckpointEntry> read_checkpoint(const std::filesystem::path& file);

}  // namespace subword
