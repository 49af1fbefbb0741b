#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "subword/debruijn_graph.hpp"
#include "subword/errors.hpp"
#include "subword/global_complexity.hpp"

namespace subword {
namespace {

namespace fs = std::filesystem;

class TempFile {
 public:
  explicit TempFile(const std::string& name)
      : path_(fs::temp_directory_path() / (name + "-" + std::to_string(::getpid()))) {
    fs::remove(path_);
  }
  ~TempFile() { fs::remove(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Graph, Sizes) {
  EXPECT_EQ(DeBruijnGraph(2, 2).vertex_count(), 4u);
  EXPECT_EQ(DeBruijnGraph(2, 2).arc_count(), 8u);
  EXPECT_EQ(DeBruijnGraph(2, 3).vertex_count(), 8u);
  EXPECT_EQ(DeBruijnGraph(2, 3).arc_count(), 16u);
  EXPECT_EQ(DeBruijnGraph(3, 1).vertex_count(), 3u);
  EXPECT_EQ(DeBruijnGraph(3, 1).arc_count(), 9u);
  EXPECT_THROW(DeBruijnGraph(2, 30, 1000), BudgetExceeded);
  EXPECT_THROW(DeBruijnGraph(2, 0), DomainError);
}

TEST(Graph, DegreesAndArcDefinition) {
  for (auto [q, k] : {std::pair{2u, 1u}, {2u, 3u}, {3u, 2u}, {4u, 2u}}) {
    const DeBruijnGraph g(q, k);
    std::vector<int> in(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const std::string from = g.vertex_word(v).to_string();
      std::set<Vertex> out;
      for (unsigned s = 0; s < q; ++s) {
        const Vertex u = g.successor(v, static_cast<Symbol>(s));
        out.insert(u);
        ++in[u];
        const std::string to = g.vertex_word(u).to_string();
        ASSERT_EQ(from.substr(1), to.substr(0, k - 1));
        ASSERT_TRUE(g.has_arc(v, u));
        const Arc a = g.arc(v, static_cast<Symbol>(s));
        EXPECT_EQ(g.arc_word(a).to_string(), from + to.back());
        EXPECT_EQ(g.arc_source(a), v);
        EXPECT_EQ(g.arc_target(a), u);
      }
      EXPECT_EQ(out.size(), q);
    }
    for (int d : in) EXPECT_EQ(d, static_cast<int>(q));
  }
}

TEST(Graph, StronglyConnected) {
  for (auto [q, k] : {std::pair{2u, 4u}, {3u, 2u}}) {
    const DeBruijnGraph g(q, k);
    // Shifting in the target's k letters reaches it from any vertex.
    for (Vertex source = 0; source < g.vertex_count(); ++source) {
      for (Vertex target = 0; target < g.vertex_count(); ++target) {
        Vertex v = source;
        const Word word = g.vertex_word(target);
        for (Symbol s : word.symbols()) v = g.successor(v, s);
        ASSERT_EQ(v, target);
      }
    }
  }
}

TEST(Graph, VertexWordRoundTrip) {
  const DeBruijnGraph g(3, 3);
  for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.vertex_of(g.vertex_word(v)), v);
  EXPECT_THROW(g.vertex_of(Word::parse("q=3:01")), DomainError);
  EXPECT_THROW(g.vertex_of(Word::parse("q=2:010")), DomainError);
}

TEST(PathWord, Examples) {
  const GraphPath p = path_of_word(Word::parse("00101"), 3);
  EXPECT_EQ(p.vertices, (std::vector<Vertex>{0b001, 0b010, 0b101}));
  EXPECT_EQ(word_of_path(p).to_string(), "00101");

  EXPECT_EQ(word_of_path(GraphPath{2, 3, {0b110}}).to_string(), "110");

  const GraphPath martin = path_of_word(Word::parse("0011101000"), 4);
  EXPECT_EQ(martin.vertices.size(), 7u);
  EXPECT_EQ(martin.length(), 6u);

  try {
    path_of_word(Word::parse("0101"), 2);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "word revisits vertex; not a path");
  }
}

TEST(PathWord, HamiltonianWalkFromEulerCircuit) {
  // 000,001,010,101,011,111,110,100 read as a path of B(2,3).
  const GraphPath p{2, 3, {0, 1, 2, 5, 3, 7, 6, 4}};
  const Word w = word_of_path(p);
  EXPECT_EQ(w.size(), 10u);
  EXPECT_EQ(factor_count(w, 3), 8u);
}

TEST(PathWord, RejectsNonPaths) {
  EXPECT_THROW(word_of_path(GraphPath{2, 2, {}}), DomainError);
  EXPECT_THROW(word_of_path(GraphPath{2, 2, {0, 3}}), DomainError);  // 00 -> 11 no arc
  EXPECT_THROW(word_of_path(GraphPath{2, 2, {1, 2, 1}}), DomainError);  // repeat
  EXPECT_THROW(path_of_word(Word::parse("01"), 3), DomainError);
}

TEST(PathWord, RoundTripProperty) {
  std::mt19937_64 rng(42);
  for (unsigned q : {2u, 3u}) {
    for (unsigned k = 1; k <= 4; ++k) {
      const DeBruijnGraph g(q, k);
      for (int trial = 0; trial < 50; ++trial) {
        // Random walk that stops before repeating.
        GraphPath p{q, k, {std::uniform_int_distribution<Vertex>(0, g.vertex_count() - 1)(rng)}};
        std::set<Vertex> seen{p.vertices.front()};
        for (;;) {
          const Vertex next = g.successor(p.vertices.back(),
                                          static_cast<Symbol>(std::uniform_int_distribution<unsigned>(0, q - 1)(rng)));
          if (!seen.insert(next).second) break;
          p.vertices.push_back(next);
        }
        const Word w = word_of_path(p);
        ASSERT_EQ(w.size(), k + p.length());
        ASSERT_EQ(path_of_word(w, k), p);
        ASSERT_EQ(word_of_path(path_of_word(w, k)), w);
      }
    }
  }
}

TEST(CountPaths, Examples) {
  EXPECT_EQ(count_paths(2, 3, 4), 42u);
  EXPECT_EQ(count_paths(2, 5, 15), 79006u);
  EXPECT_EQ(count_paths(2, 2, 0), 4u);
  EXPECT_EQ(count_paths(2, 2, 4), 0u);  // longer than any path
}

TEST(CountPaths, MatchesWindowEnumeration) {
  for (unsigned m = 1; m <= 3; ++m) {
    for (std::size_t L = 0; L <= 8; ++L) {
      ASSERT_EQ(count_paths(2, m, L), testing::words_with_distinct_windows(2, m, L))
          << "m=" << m << " L=" << L;
    }
  }
  for (std::size_t L = 0; L <= 6; ++L) {
    ASSERT_EQ(count_paths(3, 2, L), testing::words_with_distinct_windows(3, 2, L)) << L;
  }
}

TEST(CountPaths, ThreadCountIndependent) {
  for (unsigned t : {1u, 2u, 5u}) {
    EXPECT_EQ(count_paths(2, 4, 10, {.threads = t}), count_paths(2, 4, 10, {.threads = 1}));
  }
}

TEST(CountPaths, LargeGraphUsesTableVisitedSet) {
  // B(2,7) has 128 vertices, beyond the 64-bit mask.
  PathCountOptions opts;
  opts.vertex_budget = 128;
  const DeBruijnGraph g(2, 7);
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) total += count_paths_from(g, v, 3);
  EXPECT_EQ(count_paths(2, 7, 3, opts), total);
  EXPECT_EQ(total, testing::words_with_distinct_windows(2, 7, 3));
  EXPECT_THROW(count_paths(2, 7, 3), BudgetExceeded);
}

TEST(CountPaths, RelabelingInvariance) {
  // Per-start-vertex counts are permuted by a letter permutation; totals match.
  const DeBruijnGraph g(3, 2);
  const std::vector<Symbol> perm{2, 0, 1};
  for (std::uint64_t L : {2u, 4u, 6u}) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const Vertex image = g.vertex_of(relabel(g.vertex_word(v), perm));
      ASSERT_EQ(count_paths_from(g, v, L), count_paths_from(g, image, L));
    }
  }
}

TEST(MViaGraph, Examples) {
  EXPECT_EQ(m_via_graph(2, 4).M, BigCount(8));
  EXPECT_EQ(m_via_graph(2, 13).M, BigCount(854));
  EXPECT_EQ(m_via_graph(2, 19).M, BigCount(256));
  const auto s = m_via_graph(2, 20);
  EXPECT_EQ(s.K, 16u);
  EXPECT_EQ(s.R, (std::vector<std::uint64_t>{4, 5}));
  EXPECT_EQ(s.method, Method::graph);
  EXPECT_THROW(m_via_graph(2, 2), DomainError);
}

TEST(MViaGraph, AgreesWithBruteForce) {
  for (unsigned q : {2u, 3u}) {
    for (std::uint64_t N = q + 1; *try_pow(q, N) <= (1u << 16); ++N) {
      ASSERT_EQ(m_via_graph(q, N).M, brute_force_stats(q, N).M) << q << " " << N;
    }
  }
}

TEST(EnumerateMaxWords, Examples) {
  std::vector<std::string> words;
  EXPECT_EQ(enumerate_max_words(2, 3, [&](const Word& w) { words.push_back(w.to_string()); }), 6u);
  EXPECT_EQ(words, (std::vector<std::string>{"001", "010", "011", "100", "101", "110"}));

  std::vector<Word> ten;
  enumerate_max_words(2, 10, [&](const Word& w) { ten.push_back(w); });
  ASSERT_EQ(ten.size(), 16u);
  for (const auto& w : ten) {
    EXPECT_EQ(factor_count(w, 3), 8u);
    EXPECT_EQ(max_complexity(w), 8u);
  }
  EXPECT_EQ(enumerate_max_words(2, 5, [](const Word&) {}), 4u);
}

TEST(EnumerateMaxWords, MatchesBruteForceStream) {
  for (auto [q, N] : {std::pair{2u, 9u}, {2u, 12u}, {3u, 6u}, {3u, 8u}}) {
    std::vector<std::string> graph, brute;
    enumerate_max_words(q, N, [&](const Word& w) { graph.push_back(w.to_string()); });
    brute_force_stats(q, N, [&](const Word& w) { brute.push_back(w.to_string()); });
    ASSERT_EQ(graph, brute) << q << " " << N;
  }
}

TEST(EulerianCircuit, UsesEveryArcOnceAndIsHamiltonianOneUp) {
  for (unsigned q : {2u, 3u, 4u}) {
    for (unsigned k = 1; k <= 3; ++k) {
      const DeBruijnGraph g(q, k);
      const auto arcs = eulerian_circuit(g);
      ASSERT_EQ(arcs.size(), g.arc_count());
      EXPECT_EQ(std::set<Arc>(arcs.begin(), arcs.end()).size(), arcs.size());
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc next = arcs[(i + 1) % arcs.size()];
        ASSERT_EQ(g.arc_target(arcs[i]), g.arc_source(next)) << "closed walk";
      }
      EXPECT_EQ(g.arc_source(arcs.front()), 0u);
      // Arc labels are the vertices of B(q,k+1), consecutive ones adjacent.
      const GraphPath ham{q, k + 1, arcs};
      EXPECT_EQ(word_of_path(ham).size(), g.arc_count() + k);
    }
  }
}

TEST(EulerianCircuit, SmallestArcFirst) {
  const DeBruijnGraph g(2, 2);
  std::vector<std::string> labels;
  for (Arc a : eulerian_circuit(g)) labels.push_back(g.arc_word(a).to_string());
  EXPECT_EQ(labels, (std::vector<std::string>{"000", "001", "010", "101", "011", "111", "110",
                                              "100"}));
}

TEST(HamiltonianCycles, SmallGraphs) {
  EXPECT_EQ(count_hamiltonian_cycles(DeBruijnGraph(2, 1)), 1u);
  EXPECT_EQ(count_hamiltonian_cycles(DeBruijnGraph(2, 2)), 1u);
  EXPECT_EQ(count_hamiltonian_cycles(DeBruijnGraph(2, 3)), 2u);
  EXPECT_EQ(count_hamiltonian_cycles(DeBruijnGraph(2, 4)), 16u);
  EXPECT_EQ(count_hamiltonian_cycles(DeBruijnGraph(3, 1)), 2u);
  EXPECT_EQ(count_hamiltonian_cycles(DeBruijnGraph(3, 2)), 24u);
  EXPECT_THROW(count_hamiltonian_cycles(DeBruijnGraph(2, 6)), BudgetExceeded);
}

TEST(GraphDot, Structure) {
  const std::string dot22 = graph_to_dot(DeBruijnGraph(2, 2));
  EXPECT_EQ(std::count(dot22.begin(), dot22.end(), '>'), 8);
  EXPECT_NE(dot22.find("\"01\" -> \"10\" [label=\"010\"];"), std::string::npos);

  const std::string dot21 = graph_to_dot(DeBruijnGraph(2, 1));
  EXPECT_EQ(dot21,
            "digraph \"B(2,1)\" {\n"
            "  \"0\";\n"
            "  \"1\";\n"
            "  \"0\" -> \"0\" [label=\"00\"];\n"
            "  \"0\" -> \"1\" [label=\"01\"];\n"
            "  \"1\" -> \"0\" [label=\"10\"];\n"
            "  \"1\" -> \"1\" [label=\"11\"];\n"
            "}\n");

  const std::string dot31 = graph_to_dot(DeBruijnGraph(3, 1));
  EXPECT_EQ(std::count(dot31.begin(), dot31.end(), '>'), 9);
}

TEST(Checkpoint, LineFormat) {
  EXPECT_EQ(format_checkpoint_line({7, 1234}), "vertex=7 count=1234 done");
}

TEST(Checkpoint, InterruptAndResume) {
  TempFile ledger("subword-ckpt-test");
  PathCountOptions opts;
  opts.checkpoint = ledger.path();
  opts.threads = 1;
  opts.max_new_vertices = 5;

  const auto first = count_paths_resumable(2, 5, 15, opts);
  EXPECT_FALSE(first.complete);
  EXPECT_EQ(first.vertices_done, 5u);
  EXPECT_EQ(read_checkpoint(ledger.path()).size(), 5u);

  const DeBruijnGraph g(2, 5);
  std::string expected;
  for (Vertex v = 0; v < 5; ++v) {
    expected += format_checkpoint_line({v, count_paths_from(g, v, 15)}) + "\n";
  }
  EXPECT_EQ(slurp(ledger.path()), expected);

  opts.max_new_vertices.reset();
  opts.threads = 3;
  const auto second = count_paths_resumable(2, 5, 15, opts);
  EXPECT_TRUE(second.complete);
  EXPECT_EQ(second.vertices_resumed, 5u);
  EXPECT_EQ(second.total, 79006u);
  EXPECT_EQ(read_checkpoint(ledger.path()).size(), 32u);

  // A finished ledger resumes to the same total without recounting.
  const auto third = count_paths_resumable(2, 5, 15, opts);
  EXPECT_EQ(third.vertices_resumed, 32u);
  EXPECT_EQ(third.total, 79006u);
}

TEST(Checkpoint, TornTrailingLineIsDropped) {
  TempFile ledger("subword-ckpt-torn");
  {
    std::ofstream out(ledger.path());
    out << "vertex=0 count=1 done\nvertex=1 cou";
  }
  const auto entries = read_checkpoint(ledger.path());
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0], (CheckpointEntry{0, 1}));
  EXPECT_EQ(slurp(ledger.path()), "vertex=0 count=1 done\n");
}

TEST(Checkpoint, MalformedOrConflictingLedgersRejected) {
  TempFile ledger("subword-ckpt-bad");
  {
    std::ofstream out(ledger.path());
    out << "vertex=0 count=1 done\ngarbage\n";
  }
  EXPECT_THROW(read_checkpoint(ledger.path()), DomainError);
  {
    std::ofstream out(ledger.path());
    out << "vertex=0 count=1 done\nvertex=0 count=2 done\n";
  }
  EXPECT_THROW(read_checkpoint(ledger.path()), DomainError);
  {
    std::ofstream out(ledger.path());
    out << "vertex=99 count=1 done\n";
  }
  PathCountOptions opts;
  opts.checkpoint = ledger.path();
  EXPECT_THROW(count_paths_resumable(2, 3, 2, opts), DomainError);
}

TEST(Checkpoint, MissingFileIsEmpty) {
  EXPECT_TRUE(read_checkpoint("/nonexistent/subword/ledger").empty());
}

}  // namespace
}  // namespace subword
