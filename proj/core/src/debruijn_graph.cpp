#include "subword/debruijn_graph.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "subword/count.hpp"
#include "subword/errors.hpp"

namespace subword {

DeBruijnGraph::DeBruijnGraph(unsigned q, unsigned k, std::uint64_t budget) : q_(q), k_(k) {
  if (q < 1) throw DomainError("de Bruijn graph needs q >= 1");
  if (k < 1) throw DomainError("de Bruijn graph needs k >= 1");
  const auto arcs = try_pow(q, std::uint64_t{k} + 1);
  if (!arcs || *arcs > budget) {
    throw BudgetExceeded("B(" + std::to_string(q) + "," + std::to_string(k) +
                         ") exceeds the graph budget of " + std::to_string(budget) + " arcs");
  }
  vertices_ = *arcs / q;
  high_ = vertices_ / q;
}

Word DeBruijnGraph::vertex_word(Vertex v) const {
  if (v >= vertices_) throw DomainError("vertex out of range");
  std::vector<Symbol> letters(k_);
  for (unsigned i = k_; i-- > 0;) {
    letters[i] = static_cast<Symbol>(v % q_);
    v /= q_;
  }
  return Word(Alphabet(q_), std::move(letters));
}

Word DeBruijnGraph::arc_word(Arc a) const {
  if (a >= arc_count()) throw DomainError("arc out of range");
  std::vector<Symbol> letters(k_ + 1);
  for (unsigned i = k_ + 1; i-- > 0;) {
    letters[i] = static_cast<Symbol>(a % q_);
    a /= q_;
  }
  return Word(Alphabet(q_), std::move(letters));
}

Vertex DeBruijnGraph::vertex_of(const Word& w) const {
  if (w.q() != q_ || w.size() != k_) {
    throw DomainError("word '" + w.to_string() + "' is not a vertex of B(" + std::to_string(q_) +
                      "," + std::to_string(k_) + ")");
  }
  Vertex v = 0;
  for (Symbol s : w.symbols()) v = v * q_ + s;
  return v;
}

Word word_of_path(const GraphPath& path) {
  if (path.vertices.empty()) throw DomainError("empty path has no word");
  const DeBruijnGraph g(path.q, path.k, std::numeric_limits<std::uint64_t>::max());
  std::vector<Vertex> sorted = path.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("walk repeats a vertex; not a path");
  }
  Word first = g.vertex_word(path.vertices.front());
  std::vector<Symbol> letters(first.symbols().begin(), first.symbols().end());
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    const Vertex prev = path.vertices[i - 1];
    const Vertex cur = path.vertices[i];
    if (cur >= g.vertex_count() || !g.has_arc(prev, cur)) {
      throw DomainError("no arc between consecutive path vertices " + std::to_string(i - 1) +
                        " and " + std::to_string(i));
    }
    letters.push_back(static_cast<Symbol>(cur % path.q));
  }
  return Word(Alphabet(path.q), std::move(letters));
}

GraphPath path_of_word(const Word& w, unsigned k) {
  if (k < 1) throw DomainError("path_of_word needs k >= 1");
  if (w.size() < k) throw DomainError("word shorter than k has no path");
  const DeBruijnGraph g(w.q(), k, std::numeric_limits<std::uint64_t>::max());
  GraphPath path{w.q(), k, {}};
  path.vertices.reserve(w.size() - k + 1);
  for (std::size_t i = 0; i + k <= w.size(); ++i) path.vertices.push_back(g.vertex_of(w.factor(i, k)));
  std::vector<Vertex> sorted = path.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("word revisits vertex; not a path");
  }
  return path;
}

namespace {

class MaskSet {
 public:
  explicit MaskSet(std::uint64_t) {}
  bool test(Vertex v) const noexcept { return (bits_ >> v) & 1u; }
  void set(Vertex v) noexcept { bits_ |= std::uint64_t{1} << v; }
  void reset(Vertex v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

 private:
  std::uint64_t bits_ = 0;
};

class TableSet {
 public:
  explicit TableSet(std::uint64_t size) : bits_(size, 0) {}
  bool test(Vertex v) const noexcept { return bits_[v] != 0; }
  void set(Vertex v) noexcept { bits_[v] = 1; }
  void reset(Vertex v) noexcept { bits_[v] = 0; }

 private:
  std::vector<char> bits_;
};

struct Frame {
  Vertex vertex;
  unsigned next_letter;
};

// Iterative DFS over distinct-vertex paths from `start` with exactly
// `length` arcs. `on_path` sees the frame stack plus the final vertex.
template <class Visited, class OnPath>
void walk_paths(const DeBruijnGraph& g, Vertex start, std::uint64_t length, OnPath&& on_path) {
  std::vector<Frame> stack;
  if (length == 0) {
    on_path(stack, start);
    return;
  }
  if (length >= g.vertex_count()) return;
  Visited visited(g.vertex_count());
  stack.reserve(length + 1);
  stack.push_back({start, 0});
  visited.set(start);
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_letter == g.q()) {
      visited.reset(top.vertex);
      stack.pop_back();
      continue;
    }
    const Vertex next = g.successor(top.vertex, static_cast<Symbol>(top.next_letter++));
    if (visited.test(next)) continue;
    if (stack.size() == length) {
      on_path(stack, next);
      continue;
    }
    visited.set(next);
    stack.push_back({next, 0});
  }
}

template <class OnPath>
void walk_paths_any(const DeBruijnGraph& g, Vertex start, std::uint64_t length, OnPath&& on_path) {
  if (g.vertex_count() <= 64) {
    walk_paths<MaskSet>(g, start, length, on_path);
  } else {
    walk_paths<TableSet>(g, start, length, on_path);
  }
}

DeBruijnGraph graph_within(unsigned q, unsigned m, std::uint64_t vertex_budget) {
  const auto vertices = try_pow(q, m);
  if (!vertices || *vertices > vertex_budget) {
    throw BudgetExceeded("B(" + std::to_string(q) + "," + std::to_string(m) +
                         ") exceeds the path-search budget of " + std::to_string(vertex_budget) +
                         " vertices");
  }
  return DeBruijnGraph(q, m, std::numeric_limits<std::uint64_t>::max());
}

}  // namespace

std::uint64_t count_paths_from(const DeBruijnGraph& g, Vertex start, std::uint64_t length) {
  if (start >= g.vertex_count()) throw DomainError("start vertex out of range");
  std::uint64_t total = 0;
  walk_paths_any(g, start, length, [&](const auto&, Vertex) { total = checked_add(total, 1); });
  return total;
}

PathCountResult count_paths_resumable(unsigned q, unsigned m, std::uint64_t length,
                                      const PathCountOptions& options) {
  const DeBruijnGraph g = graph_within(q, m, options.vertex_budget);
  const std::uint64_t vertices = g.vertex_count();

  std::vector<std::optional<std::uint64_t>> per_vertex(vertices);
  PathCountResult result;
  std::ofstream ledger;
  if (!options.checkpoint.empty()) {
    for (const auto& e : read_checkpoint(options.checkpoint)) {
      if (e.vertex >= vertices) {
        throw DomainError("checkpoint vertex " + std::to_string(e.vertex) + " out of range for B(" +
                          std::to_string(q) + "," + std::to_string(m) + ")");
      }
      per_vertex[e.vertex] = e.count;
    }
    ledger.open(options.checkpoint, std::ios::app);
    if (!ledger) throw Error("cannot open checkpoint " + options.checkpoint.string());
  }

  std::vector<Vertex> pending;
  for (Vertex v = 0; v < vertices; ++v) {
    if (per_vertex[v]) {
      ++result.vertices_resumed;
    } else {
      pending.push_back(v);
    }
  }
  const std::uint64_t quota =
      std::min<std::uint64_t>(pending.size(), options.max_new_vertices.value_or(pending.size()));

  std::mutex ledger_mutex;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::uint64_t i = next++; i < quota; i = next++) {
        const Vertex v = pending[i];
        const std::uint64_t c = count_paths_from(g, v, length);
        std::lock_guard lock(ledger_mutex);
        per_vertex[v] = c;
        if (ledger.is_open()) {
          ledger << format_checkpoint_line({v, c}) << '\n';
          ledger.flush();
        }
      }
    } catch (...) {
      std::lock_guard lock(ledger_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(options.threads), quota));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  result.complete = true;
  for (const auto& c : per_vertex) {
    if (!c) {
      result.complete = false;
      continue;
    }
    ++result.vertices_done;
    result.total = checked_add(result.total, *c);
  }
  return result;
}

std::uint64_t count_paths(unsigned q, unsigned m, std::uint64_t length,
                          const PathCountOptions& options) {
  PathCountOptions unbounded = options;
  unbounded.max_new_vertices.reset();
  return count_paths_resumable(q, m, length, unbounded).total;
}

GlobalStats m_via_graph(unsigned q, std::uint64_t N, const PathCountOptions& options) {
  const Bracket b = bracket_k(q, N);
  const std::uint64_t paths = count_paths(q, b.k + 1, N - b.k - 1, options);
  return GlobalStats{q, N, global_K(q, N), global_R(q, N), BigCount(paths), Method::graph};
}

std::uint64_t enumerate_max_words(unsigned q, std::uint64_t N, const WordSink& sink,
                                  std::uint64_t vertex_budget) {
  const Bracket b = bracket_k(q, N);
  const DeBruijnGraph g = graph_within(q, b.k + 1, vertex_budget);
  const std::uint64_t length = N - b.k - 1;
  std::uint64_t emitted = 0;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    const Word head = g.vertex_word(start);
    walk_paths_any(g, start, length, [&](const std::vector<Frame>& stack, Vertex last) {
      std::vector<Symbol> letters(head.symbols().begin(), head.symbols().end());
      letters.reserve(N);
      for (std::size_t i = 1; i < stack.size(); ++i) {
        letters.push_back(static_cast<Symbol>(stack[i].vertex % q));
      }
      if (length > 0) letters.push_back(static_cast<Symbol>(last % q));
      sink(Word(Alphabet(q), std::move(letters)));
      ++emitted;
    });
  }
  return emitted;
}

std::vector<Arc> eulerian_circuit(const DeBruijnGraph& g) {
  constexpr Arc kNoArc = ~Arc{0};
  std::vector<unsigned> next_letter(g.vertex_count(), 0);
  std::vector<std::pair<Vertex, Arc>> stack{{0, kNoArc}};
  std::vector<Arc> circuit;
  circuit.reserve(g.arc_count());
  while (!stack.empty()) {
    const auto [v, via] = stack.back();
    if (next_letter[v] < g.q()) {
      const auto s = static_cast<Symbol>(next_letter[v]++);
      stack.emplace_back(g.successor(v, s), g.arc(v, s));
    } else {
      if (via != kNoArc) circuit.push_back(via);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

std::uint64_t count_hamiltonian_cycles(const DeBruijnGraph& g) {
  if (g.q() < 2) throw DomainError("Hamiltonian cycle count needs q >= 2");
  if (g.vertex_count() > 32) {
    throw BudgetExceeded("Hamiltonian cycle search is capped at 32 vertices; B(" +
                         std::to_string(g.q()) + "," + std::to_string(g.k()) + ") has " +
                         std::to_string(g.vertex_count()));
  }
  // Every cycle passes through vertex 0 once; counting cycles through it as
  // the fixed start counts each directed cycle exactly once.
  std::uint64_t cycles = 0;
  walk_paths<MaskSet>(g, 0, g.vertex_count() - 1, [&](const auto&, Vertex last) {
    if (g.has_arc(last, 0)) ++cycles;
  });
  return cycles;
}

std::string graph_to_dot(const DeBruijnGraph& g) {
  std::ostringstream out;
  out << "digraph \"B(" << g.q() << "," << g.k() << ")\" {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.vertex_word(v).to_string() << "\";\n";
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::string from = g.vertex_word(v).to_string();
    for (unsigned s = 0; s < g.q(); ++s) {
      const auto letter = static_cast<Symbol>(s);
      out << "  \"" << from << "\" -> \"" << g.vertex_word(g.successor(v, letter)).to_string()
          << "\" [label=\"" << g.arc_word(g.arc(v, letter)).to_string() << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace subword
