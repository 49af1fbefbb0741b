#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "subword/closed_forms.hpp"
#include "subword/debruijn_graph.hpp"
#include "subword/debruijn_tree.hpp"
#include "subword/json.hpp"
#include "subword/martin.hpp"
#include "subword/word.hpp"

namespace subword::cli {

namespace {

constexpr Method kAllMethods[] = {Method::closed, Method::brute, Method::graph, Method::tree,
                                  Method::formula};

std::string join_methods(const std::vector<Method>& methods, char sep = ',') {
  std::string out;
  for (Method m : methods) {
    if (!out.empty()) out += sep;
    out += to_string(m);
  }
  return out;
}

std::string join_skipped(const std::vector<Skipped>& skipped) {
  std::string out;
  for (const auto& s : skipped) {
    if (!out.empty()) out += ',';
    out += std::string(to_string(s.method)) + "(" + s.reason + ")";
  }
  return out;
}

std::string format_m(const std::optional<BigCount>& M) { return M ? to_decimal(*M) : "?"; }

std::string stats_line(const GlobalStats& s) {
  return "q=" + std::to_string(s.q) + " N=" + std::to_string(s.N) + " K=" + std::to_string(s.K) +
         " R=" + format_set(s.R) + " M=" + format_m(s.M) + " method=" + std::string(to_string(s.method));
}

nlohmann::ordered_json row_json(const TableRow& row) {
  nlohmann::ordered_json j;
  j["q"] = row.q;
  j["N"] = row.N;
  j["K"] = row.K;
  j["R"] = row.R;
  j["M"] = row.M ? nlohmann::ordered_json(to_decimal(*row.M)) : nlohmann::ordered_json(nullptr);
  j["method"] = "all";
  std::vector<std::string> agreed;
  for (Method m : row.methods_agreed) agreed.emplace_back(to_string(m));
  j["methods_agreed"] = agreed;
  auto skipped = nlohmann::ordered_json::array();
  for (const auto& s : row.skipped) {
    skipped.push_back({{"method", std::string(to_string(s.method))}, {"reason", s.reason}});
  }
  j["skipped"] = skipped;
  return j;
}

PathCountOptions path_options(unsigned q, std::uint64_t N, const Budgets& budgets) {
  PathCountOptions opts;
  opts.threads = budgets.threads;
  opts.vertex_budget = budgets.graph;
  if (!budgets.checkpoint_dir.empty() && q >= 2 && N > q) {
    const Bracket b = bracket_k(q, N);
    std::filesystem::create_directories(budgets.checkpoint_dir);
    opts.checkpoint = budgets.checkpoint_dir / ("paths-q" + std::to_string(q) + "-m" +
                                                std::to_string(b.k + 1) + "-L" +
                                                std::to_string(N - b.k - 1) + ".ckpt");
  }
  return opts;
}

GlobalStats run_one(Method m, unsigned q, std::uint64_t N, const Budgets& budgets) {
  switch (m) {
    case Method::closed:
      return closed_form_stats(q, N);
    case Method::brute:
      return brute_force_stats(q, N, {}, {budgets.brute, budgets.threads});
    case Method::graph:
      return m_via_graph(q, N, path_options(q, N, budgets));
    case Method::tree:
      return m_via_trees(q, N, {budgets.threads, budgets.graph});
    case Method::formula:
      return m_via_formula(q, N);
  }
  throw DomainError("unknown method");
}

// Reason a method cannot run on (q, N), or empty if it can.
std::string inapplicable(Method m, unsigned q, std::uint64_t N) {
  switch (m) {
    case Method::graph:
    case Method::tree:
      if (q < 2 || N <= q) return "N <= q";
      return {};
    case Method::formula:
      if (!debruijn_order(q, N)) return "not a de Bruijn length";
      return {};
    default:
      return {};
  }
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Disagreement& e) {
    err << "error: methods disagree\n" << e.what();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::vector<Method> parse_methods(std::string_view list) {
  if (list == "all") return {std::begin(kAllMethods), std::end(kAllMethods)};
  std::vector<Method> methods;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto name = list.substr(0, comma);
    const auto m = parse_method(name);
    if (!m) throw DomainError("unknown method '" + std::string(name) + "'");
    if (std::find(methods.begin(), methods.end(), *m) == methods.end()) methods.push_back(*m);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (methods.empty()) throw DomainError("no method given");
  return methods;
}

MethodRun run_methods(unsigned q, std::uint64_t N, const std::vector<Method>& methods,
                      const Budgets& budgets, bool strict) {
  MethodRun run;
  for (Method m : methods) {
    if (!strict) {
      if (auto reason = inapplicable(m, q, N); !reason.empty()) {
        run.skipped.push_back({m, reason});
        continue;
      }
    }
    try {
      run.results.push_back(run_one(m, q, N, budgets));
    } catch (const BudgetExceeded& e) {
      if (strict) throw;
      run.skipped.push_back({m, "over budget"});
    }
  }
  return run;
}

TableRow reconcile(unsigned q, std::uint64_t N, const MethodRun& run) {
  if (run.results.empty()) {
    throw DomainError("no applicable method for q=" + std::to_string(q) + " N=" + std::to_string(N));
  }
  TableRow row;
  row.q = q;
  row.N = N;
  row.K = run.results.front().K;
  row.R = run.results.front().R;
  row.skipped = run.skipped;
  bool agree = true;
  for (const auto& s : run.results) {
    if (s.K != row.K || s.R != row.R) agree = false;
    if (s.M) {
      if (row.M && *row.M != *s.M) agree = false;
      if (!row.M) row.M = s.M;
    }
    row.methods_agreed.push_back(s.method);
  }
  if (!agree) {
    std::string report;
    for (const auto& s : run.results) report += "  " + stats_line(s) + "\n";
    throw Disagreement(report);
  }
  return row;
}

std::vector<TableRow> build_table(unsigned q, std::uint64_t n_max, std::vector<Method> methods,
                                  const Budgets& budgets) {
  // Closed forms are the K/R reference and always take part.
  if (std::find(methods.begin(), methods.end(), Method::closed) == methods.end()) {
    methods.insert(methods.begin(), Method::closed);
  }
  std::vector<TableRow> rows;
  for (std::uint64_t N = 1; N <= n_max; ++N) {
    rows.push_back(reconcile(q, N, run_methods(q, N, methods, budgets, false)));
  }
  return rows;
}

std::string format_set(const std::vector<std::uint64_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string format_table(const std::vector<TableRow>& rows, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::csv:
      out << "N,K,R,M\n";
      for (const auto& r : rows) {
        std::string R;
        for (auto i : r.R) R += (R.empty() ? "" : " ") + std::to_string(i);
        out << r.N << ',' << r.K << ",\"" << R << "\"," << format_m(r.M) << '\n';
      }
      break;
    case Format::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) arr.push_back(row_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::text:
      out << std::setw(4) << "N" << std::setw(6) << "K" << "  " << std::left << std::setw(10) << "R"
          << std::right << std::setw(12) << "M" << "  methods\n";
      for (const auto& r : rows) {
        std::string R;
        for (auto i : r.R) R += (R.empty() ? "" : ", ") + std::to_string(i);
        out << std::setw(4) << r.N << std::setw(6) << r.K << "  " << std::left << std::setw(10) << R
            << std::right << std::setw(12) << format_m(r.M) << "  " << join_methods(r.methods_agreed);
        if (!r.skipped.empty()) out << " (skipped " << join_skipped(r.skipped) << ")";
        out << '\n';
      }
      break;
  }
  return out.str();
}

int cmd_complexity(std::string_view text, bool json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Word w = Word::parse(text);
    const ComplexityProfile p = complexity_profile(w);
    if (json) {
      out << to_json(w, p) << '\n';
      return 0;
    }
    out << "f=(";
    for (std::size_t i = 0; i < p.values.size(); ++i) out << (i ? "," : "") << p.values[i];
    std::vector<std::uint64_t> argmax(p.argmax_lengths.begin(), p.argmax_lengths.end());
    out << ") C=" << p.max_value << " argmax=" << format_set(argmax) << '\n';
    return 0;
  });
}

int cmd_stats(unsigned q, std::uint64_t N, std::string_view methods, Format format,
              const Budgets& budgets, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto list = parse_methods(methods);
    if (list.size() == 1) {
      const GlobalStats s = run_methods(q, N, list, budgets, true).results.front();
      out << (format == Format::text ? stats_line(s) : to_json(s)) << '\n';
      return 0;
    }
    const TableRow row = reconcile(q, N, run_methods(q, N, list, budgets, false));
    if (format == Format::text) {
      out << "q=" << q << " N=" << N << " K=" << row.K << " R=" << format_set(row.R)
          << " M=" << format_m(row.M) << " methods_agreed=" << join_methods(row.methods_agreed);
      if (!row.skipped.empty()) out << " skipped=" << join_skipped(row.skipped);
      out << '\n';
    } else {
      out << row_json(row).dump() << '\n';
    }
    return 0;
  });
}

int cmd_table(unsigned q, std::uint64_t n_max, std::string_view methods, Format format,
              const Budgets& budgets, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << format_table(build_table(q, n_max, parse_methods(methods), budgets), format);
    return 0;
  });
}

int cmd_martin(unsigned q, std::optional<unsigned> k, std::optional<std::uint64_t> N,
               std::optional<unsigned> append, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (k.has_value() == N.has_value()) throw DomainError("give exactly one of --k and --n");
    if (append && !k) throw DomainError("--append needs --k");
    Word w = N ? extended_martin_word(q, *N)
               : append ? appended_martin_word(q, *k, static_cast<Symbol>(*append))
                        : martin_word(q, *k);
    out << w.to_string() << '\n';
    return 0;
  });
}

int cmd_enumerate(unsigned q, std::uint64_t N, const Budgets& budgets, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const auto print = [&](const Word& w) { out << w.to_string() << '\n'; };
    if (q < 2 || N <= q) {
      brute_force_stats(q, N, print, {budgets.brute, budgets.threads});
    } else {
      enumerate_max_words(q, N, print, budgets.graph);
    }
    return 0;
  });
}

int cmd_graph_dot(unsigned q, unsigned k, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << graph_to_dot(DeBruijnGraph(q, k));
    return 0;
  });
}

int cmd_tree(std::string_view root, std::optional<unsigned> q, std::optional<std::size_t> max_level,
             bool dot, std::uint64_t node_cap, const Budgets& budgets, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const Word w = q ? Word::parse(root, *q) : Word::parse(root);
    if (dot) {
      out << tree_to_dot(build_tree(w, {max_level, node_cap}));
      return 0;
    }
    const auto levels = tree_level_counts(w, max_level, budgets.graph);
    for (std::size_t d = 0; d < levels.size(); ++d) out << "level " << d << ": " << levels[d] << '\n';
    return 0;
  });
}

int cmd_euler(unsigned q, unsigned k, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const DeBruijnGraph g(q, k);
    const auto arcs = eulerian_circuit(g);
    for (std::size_t i = 0; i < arcs.size(); ++i) out << (i ? " " : "") << g.arc_word(arcs[i]).to_string();
    out << '\n';
    return 0;
  });
}

int cmd_hamiltonian(unsigned q, unsigned k, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::uint64_t cycles = count_hamiltonian_cycles(DeBruijnGraph(q, k));
    out << "B(" << q << "," << k << ") hamiltonian_cycles=" << cycles;
    if (q == 2) out << " formula=" << to_decimal(hamiltonian_cycle_count_formula(k));
    out << '\n';
    return 0;
  });
}

int cmd_formulas(unsigned q, unsigned max_k, const Budgets& budgets, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    for (unsigned k = 1; k <= max_k; ++k) {
      const FormulaCheck c = check_debruijn_formula(q, k, {budgets.brute, budgets.threads});
      out << "q=" << q << " k=" << k << " N=" << c.N << " formula=" << to_decimal(c.formula)
          << " enumerated=" << (c.enumerated ? to_decimal(*c.enumerated) : "skipped")
          << " status=" << (c.verified() ? "verified" : c.enumerated ? "MISMATCH" : "unverified")
          << '\n';
      if (c.enumerated && !c.verified()) return 2;
    }
    return 0;
  });
}

}  // namespace subword::cli
