#pragma once

// Command-line front end. run() is separate from main() so tests can drive it
// with string streams.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpf/fpf.hpp"

namespace fpf::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 66;

using json = nlohmann::json;

namespace detail {

struct Common {
  bool json = false;
  std::size_t prime_cap = kDefaultBruteForceCap;
  std::size_t oracle_cap = kDefaultOracleCap;
};

class Clock {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return read_text_file(path);
}

inline Mode parse_mode(const std::string& s) { return s == "inv" ? Mode::involution : Mode::automorphism; }

inline json envelope(std::optional<bool> decision, const std::optional<Permutation>& witness, double ms) {
  json j;
  j["decision"] = decision ? json(*decision) : json(nullptr);
  j["witness_cycles"] = witness ? json(witness->to_cycle_string()) : json(nullptr);
  j["timing_ms"] = ms;
  return j;
}

inline json trace_json(const std::vector<TraceEntry>& trace) {
  json arr = json::array();
  for (const auto& e : trace) {
    arr.push_back({{"module", e.module},
                   {"tag", e.tag ? json(std::string(to_string(*e.tag))) : json(nullptr)},
                   {"decision", e.decision}});
  }
  return arr;
}

inline std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s;
}

/// One engine-versus-oracle comparison for the corpus runner.
struct CorpusRow {
  enum class Status { agree, disagree, unsupported, skipped } status = Status::agree;
  std::string detail;
};

inline CorpusRow compare_one(const std::string& g6, Mode mode, const Common& common) {
  CorpusRow row;
  Graph g;
  try {
    g = parse_graph6(g6);
  } catch (const ParseError& e) {
    return {CorpusRow::Status::disagree, "unparsable: " + std::string(e.what())};
  }
  if (g.order() > common.oracle_cap) return {CorpusRow::Status::skipped, ""};
  EngineOptions opts;
  opts.prime_cap = common.prime_cap;
  EngineResult r;
  try {
    r = solve(g, mode, opts);
  } catch (const UnsupportedQuotient& e) {
    return {CorpusRow::Status::unsupported, e.what()};
  }
  const auto expected = mode == Mode::automorphism ? oracle_fpf_aut(g, common.oracle_cap)
                                                   : oracle_fpf_inv(g, common.oracle_cap);
  if (r.decision != expected.has_value()) {
    return {CorpusRow::Status::disagree, std::string("engine ") + (r.decision ? "true" : "false") + ", oracle " +
                                             (expected ? "true" : "false")};
  }
  if (!verify_result(g, mode, r)) return {CorpusRow::Status::disagree, "engine witness fails verification"};
  return row;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"Fixed-point-free automorphisms and involutions via modular decomposition"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);
  detail::Common common;
  app.add_flag("--json", common.json, "Machine-readable output");
  app.add_option("--prime-cap", common.prime_cap, "Largest prime quotient solved by brute force")
      ->envname("FPF_PRIME_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--oracle-cap", common.oracle_cap, "Largest graph handed to the exhaustive oracle")
      ->envname("FPF_ORACLE_CAP")
      ->check(CLI::PositiveNumber);

  std::string input;
  std::string mode_text = "aut";
  const auto mode_check = CLI::IsMember({"aut", "inv"});

  auto* solve_cmd = app.add_subcommand("solve", "Decide FPF automorphism or involution with the engine");
  bool want_witness = true;
  bool want_trace = false;
  solve_cmd->add_option("graph", input, "graph6 or edge-list file; '-' or absent for stdin");
  solve_cmd->add_option("--mode", mode_text, "aut or inv")->check(mode_check);
  solve_cmd->add_flag("--witness,!--no-witness", want_witness, "Print the witness (default on)");
  solve_cmd->add_flag("--trace", want_trace, "Print the per-module recursion trace");

  auto* oracle_cmd = app.add_subcommand("oracle", "Decide by exhaustive search");
  bool fixed_edge_free = false;
  bool allow_fixed = false;
  oracle_cmd->add_option("graph", input, "graph6 or edge-list file; '-' or absent for stdin");
  oracle_cmd->add_option("--mode", mode_text, "aut or inv")->check(mode_check);
  oracle_cmd->add_flag("--fixed-edge-free", fixed_edge_free, "Search for an involution that swaps no edge");
  oracle_cmd->add_flag("--allow-fixed-vertices", allow_fixed, "With --fixed-edge-free: allow fixed vertices");

  auto* generate_cmd = app.add_subcommand("generate", "Reduction outputs or random class members, as graph6");
  std::string construction;
  std::string family;
  int k = 1;
  std::size_t n = 10;
  std::uint64_t seed = 1;
  std::string names_path;
  generate_cmd->add_option("graph", input, "Input graph for --construction");
  generate_cmd->add_option("--construction", construction, "split, bipartite, subdivide or full")
      ->check(CLI::IsMember({"split", "bipartite", "subdivide", "full"}));
  generate_cmd->add_option("--class", family, "cograph, tree-cograph, p4-sparse, tree, mw or gnp")
      ->check(CLI::IsMember({"cograph", "tree-cograph", "p4-sparse", "tree", "mw", "gnp"}));
  generate_cmd->add_option("--k", k, "Subdivision length, or the width bound for --class mw");
  generate_cmd->add_option("--n", n, "Vertex count for --class");
  generate_cmd->add_option("--seed", seed, "Random seed for --class");
  generate_cmd->add_option("--names", names_path, "Write the vertex-name sidecar of a construction here");

  auto* decompose_cmd = app.add_subcommand("decompose", "Maximal modular partition, quotient and module colors");
  decompose_cmd->add_option("graph", input, "graph6 or edge-list file; '-' or absent for stdin");

  auto* pfpf_cmd = app.add_subcommand("pfpf", "Solve a colored, masked instance");
  std::string coloring_path;
  std::string mask_path;
  std::string solver = "auto";
  pfpf_cmd->add_option("graph", input, "graph6 or edge-list file");
  pfpf_cmd->add_option("--coloring", coloring_path, "Color per vertex, one per line (default: one color)");
  pfpf_cmd->add_option("--mask", mask_path, "0/1 per vertex, one per line (default: all 0)");
  pfpf_cmd->add_option("--mode", mode_text, "aut or inv")->check(mode_check);
  pfpf_cmd->add_option("--solver", solver, "auto, complete, tree, cotree, spider or brute")
      ->check(CLI::IsMember({"auto", "complete", "tree", "cotree", "spider", "brute"}));

  auto* canon_cmd = app.add_subcommand("canon", "Print a canonical string");
  std::string method = "decomposition";
  canon_cmd->add_option("graph", input, "graph6 or edge-list file; '-' or absent for stdin");
  canon_cmd->add_option("--method", method, "decomposition, tree or small")
      ->check(CLI::IsMember({"decomposition", "tree", "small"}));

  auto* equitable_cmd = app.add_subcommand("equitable", "Check or find a 2-homogeneous equitable partition");
  std::string check_path;
  bool find = false;
  equitable_cmd->add_option("graph", input, "graph6 or edge-list file");
  auto* check_opt = equitable_cmd->add_option("--check", check_path, "Partition file, one cell per line");
  auto* find_opt = equitable_cmd->add_flag("--find", find, "Find one through the involution engine");
  check_opt->excludes(find_opt);

  auto* verify_cmd = app.add_subcommand("verify", "Check a witness in cycle notation");
  std::string witness_text;
  verify_cmd->add_option("graph", input, "graph6 or edge-list file");
  verify_cmd->add_option("--witness", witness_text, "Witness, e.g. \"(0 3)(1 2)\"")->required();
  verify_cmd->add_option("--mode", mode_text, "aut or inv")->check(mode_check);

  auto* corpus_cmd = app.add_subcommand("corpus", "Compare engine and oracle on every graph of a graph6 file");
  std::string against = "oracle";
  unsigned threads = 0;
  corpus_cmd->add_option("graph6-file", input, "One graph6 string per line")->required();
  corpus_cmd->add_option("--mode", mode_text, "aut or inv")->check(mode_check);
  corpus_cmd->add_option("--against", against, "Reference decider")->check(CLI::IsMember({"oracle"}));
  corpus_cmd->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  const Mode mode = detail::parse_mode(mode_text);
  const detail::Clock clock;
  try {
    if (solve_cmd->parsed()) {
      const Graph g = parse_graph(detail::read_input(input, in));
      EngineOptions opts{common.prime_cap, want_trace, want_witness};
      const auto r = solve(g, mode, opts);
      if (common.json) {
        auto j = detail::envelope(r.decision, r.witness, clock.elapsed_ms());
        if (want_trace) j["trace"] = detail::trace_json(r.trace);
        out << j.dump() << "\n";
      } else {
        if (r.witness) {
          out << r.witness->to_cycle_string() << "\n";
        } else {
          out << (r.decision ? "true" : "NONE") << "\n";
        }
        for (const auto& e : r.trace) {
          out << "# {" << detail::join(e.module) << "} " << (e.tag ? to_string(*e.tag) : "Vertex") << ' '
              << (e.decision ? "true" : "false") << "\n";
        }
      }
      return r.decision ? kExitTrue : kExitFalse;
    }

    if (oracle_cmd->parsed()) {
      const Graph g = parse_graph(detail::read_input(input, in));
      std::optional<Permutation> w;
      if (fixed_edge_free) {
        w = oracle_fixed_edge_free_inv(g, allow_fixed, common.oracle_cap);
      } else if (mode == Mode::automorphism) {
        w = oracle_fpf_aut(g, common.oracle_cap);
      } else {
        w = oracle_fpf_inv(g, common.oracle_cap);
      }
      if (common.json) {
        out << detail::envelope(w.has_value(), w, clock.elapsed_ms()).dump() << "\n";
      } else {
        out << (w ? w->to_cycle_string() : "NONE") << "\n";
      }
      return w ? kExitTrue : kExitFalse;
    }

    if (generate_cmd->parsed()) {
      if (construction.empty() == family.empty()) {
        err << "generate: give exactly one of --construction and --class\n";
        return kExitUsage;
      }
      Graph result;
      std::optional<std::vector<VertexName>> names;
      if (!construction.empty()) {
        const Graph g = parse_graph(detail::read_input(input, in));
        Reduction r;
        if (construction == "split") r = split_construction(g);
        if (construction == "bipartite") r = bipartite_construction(g);
        if (construction == "subdivide") r = k_subdivision(g, k);
        if (construction == "full") r = full_reduction(g, k);
        result = std::move(r.graph);
        names = std::move(r.names);
      } else {
        Rng rng(seed);
        if (family == "cograph") result = random_cograph(rng, n);
        if (family == "tree-cograph") result = random_tree_cograph(rng, n);
        if (family == "p4-sparse") result = random_p4_sparse(rng, n);
        if (family == "tree") result = random_tree(rng, n);
        if (family == "mw") result = random_bounded_modular_width(rng, n, static_cast<std::size_t>(std::max(k, 2)));
        if (family == "gnp") result = random_gnp(rng, n, 0.5);
      }
      if (!names_path.empty() && names) {
        std::ofstream f(names_path);
        if (!f) throw std::ios_base::failure("cannot write " + names_path);
        f << names_to_text(*names);
      }
      if (common.json) {
        auto j = detail::envelope(std::nullopt, std::nullopt, clock.elapsed_ms());
        j["graph6"] = to_graph6(result);
        out << j.dump() << "\n";
      } else {
        out << to_graph6(result) << "\n";
      }
      return kExitTrue;
    }

    if (decompose_cmd->parsed()) {
      const Graph g = parse_graph(detail::read_input(input, in));
      const auto cp = fpf::detail::classified_maximal_partition(g);
      if (g.order() < 2) throw std::invalid_argument("decompose: needs at least 2 vertices");
      const auto cq = colored_quotient(g, cp.partition, [&](const Graph& m) { return decomposition_canon(m, common.prime_cap); });
      const auto qc = classify_quotient(cq.quotient, common.prime_cap);
      if (common.json) {
        auto j = detail::envelope(std::nullopt, std::nullopt, clock.elapsed_ms());
        j["parts"] = cp.partition.parts;
        j["quotient_edges"] = cq.quotient.edges();
        j["colors"] = std::vector<int>(cq.coloring.values().begin(), cq.coloring.values().end());
        j["quotient_class"] = std::string(to_string(qc.tag));
        out << j.dump() << "\n";
      } else {
        out << "# parts\n";
        for (const auto& part : cp.partition.parts) out << detail::join(part) << "\n";
        out << "# quotient (" << to_string(qc.tag) << ")\n" << to_edge_list(cq.quotient);
        out << "# colors\n";
        for (std::size_t i = 0; i < cq.coloring.size(); ++i) out << i << ' ' << cq.coloring[static_cast<Vertex>(i)] << "\n";
      }
      return kExitTrue;
    }

    if (pfpf_cmd->parsed()) {
      const Graph g = parse_graph(detail::read_input(input, in));
      const std::size_t order = g.order();
      VertexColoring coloring = coloring_path.empty() ? VertexColoring::uniform(order)
                                                      : VertexColoring(parse_vertex_table(read_text_file(coloring_path), order));
      BooleanMask mask = mask_path.empty() ? BooleanMask::all(order, false) : parse_mask(read_text_file(mask_path), order);
      PfpfInstance inst{g, std::move(coloring), std::move(mask), mode};
      std::string used = solver;
      std::optional<SpiderDecomposition> sd;
      if (solver == "auto") {
        auto qc = classify_quotient(g, common.prime_cap);
        switch (qc.tag) {
          case QuotientClassTag::Edgeless:
          case QuotientClassTag::Complete: used = "complete"; break;
          case QuotientClassTag::Tree: used = "tree"; break;
          case QuotientClassTag::CoTree: used = "cotree"; break;
          case QuotientClassTag::Spider: used = "spider"; sd = qc.spider; break;
          case QuotientClassTag::SmallPrime: used = "brute"; break;
          case QuotientClassTag::Unsupported: throw UnsupportedQuotient(order, order);
        }
      }
      if (used == "spider" && !sd) {
        sd = recognize_spider(g);
        if (!sd) throw std::invalid_argument("pfpf: graph is not a spider");
      }
      std::optional<Permutation> w;
      if (used == "complete") w = pfpf_complete_or_empty(inst);
      if (used == "tree") w = pfpf_tree(inst);
      if (used == "cotree") w = pfpf_co_tree(inst);
      if (used == "spider") w = pfpf_spider(inst, *sd);
      if (used == "brute") w = pfpf_bruteforce(inst, std::max(common.prime_cap, order));
      if (common.json) {
        auto j = detail::envelope(w.has_value(), w, clock.elapsed_ms());
        j["solver"] = used;
        out << j.dump() << "\n";
      } else {
        out << (w ? w->to_cycle_string() : "NONE") << "\n";
      }
      return w ? kExitTrue : kExitFalse;
    }

    if (canon_cmd->parsed()) {
      const Graph g = parse_graph(detail::read_input(input, in));
      CanonicalForm f;
      if (method == "decomposition") f = decomposition_canon(g, common.prime_cap);
      if (method == "tree") f = tree_canon(g);
      if (method == "small") f = small_graph_canon(g, nullptr, common.prime_cap);
      if (common.json) {
        auto j = detail::envelope(std::nullopt, std::nullopt, clock.elapsed_ms());
        j["canonical"] = f.canonical;
        j["labeling"] = std::vector<Vertex>(f.labeling.images().begin(), f.labeling.images().end());
        out << j.dump() << "\n";
      } else {
        out << f.canonical << "\n";
      }
      return kExitTrue;
    }

    if (equitable_cmd->parsed()) {
      const Graph g = parse_graph(detail::read_input(input, in));
      if (!check_path.empty()) {
        const EquitablePartition p{parse_partition(read_text_file(check_path))};
        const bool ok = is_equitable(g, p);
        if (common.json) {
          auto j = detail::envelope(ok, std::nullopt, clock.elapsed_ms());
          j["two_homogeneous"] = p.is_two_homogeneous();
          out << j.dump() << "\n";
        } else {
          out << (ok ? "equitable" : "not equitable") << (p.is_two_homogeneous() ? ", 2-homogeneous" : "") << "\n";
        }
        return ok ? kExitTrue : kExitFalse;
      }
      if (!find) {
        err << "equitable: give --check FILE or --find\n";
        return kExitUsage;
      }
      EngineOptions opts;
      opts.prime_cap = common.prime_cap;
      const auto p = has_2homogeneous_equitable_partition(g, opts);
      if (common.json) {
        auto j = detail::envelope(p.has_value(), std::nullopt, clock.elapsed_ms());
        j["cells"] = p ? json(p->cells) : json(nullptr);
        out << j.dump() << "\n";
      } else if (p) {
        for (const auto& cell : p->cells) out << detail::join(cell) << "\n";
      } else {
        out << "NONE\n";
      }
      return p ? kExitTrue : kExitFalse;
    }

    if (verify_cmd->parsed()) {
      const Graph g = parse_graph(detail::read_input(input, in));
      EngineResult r;
      r.decision = true;
      r.witness = Permutation::parse_cycles(witness_text, g.order());
      const bool ok = verify_result(g, mode, r);
      if (common.json) {
        out << detail::envelope(ok, r.witness, clock.elapsed_ms()).dump() << "\n";
      } else {
        out << (ok ? "valid" : "invalid") << "\n";
      }
      return ok ? kExitTrue : kExitFalse;
    }

    if (corpus_cmd->parsed()) {
      const auto lines = split_graph6_corpus(read_text_file(input));
      std::vector<detail::CorpusRow> rows(lines.size());
      std::atomic<std::size_t> next{0};
      const unsigned workers = std::max(1u, threads ? threads : std::thread::hardware_concurrency());
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < lines.size(); i = next++) rows[i] = detail::compare_one(lines[i], mode, common);
        });
      }
      for (auto& t : pool) t.join();
      std::size_t disagreements = 0;
      std::size_t unsupported = 0;
      std::size_t skipped = 0;
      json offenders = json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        using S = detail::CorpusRow::Status;
        if (rows[i].status == S::skipped) ++skipped;
        if (rows[i].status == S::unsupported) ++unsupported;
        if (rows[i].status == S::disagree) ++disagreements;
        if (rows[i].status == S::disagree || rows[i].status == S::unsupported) {
          offenders.push_back({{"graph6", lines[i]}, {"detail", rows[i].detail}});
          if (!common.json) out << lines[i] << "\t" << rows[i].detail << "\n";
        }
      }
      const std::size_t compared = rows.size() - skipped;
      if (skipped) err << "warning: " << skipped << " graphs above the oracle cap were skipped\n";
      if (common.json) {
        auto j = detail::envelope(disagreements == 0 && unsupported == 0, std::nullopt, clock.elapsed_ms());
        j["graphs"] = compared;
        j["disagreements"] = disagreements;
        j["unsupported"] = unsupported;
        j["skipped"] = skipped;
        j["offenders"] = offenders;
        out << j.dump() << "\n";
      } else {
        out << compared << " graphs, " << disagreements << " disagreements";
        if (unsupported) out << ", " << unsupported << " unsupported";
        out << "\n";
      }
      return disagreements == 0 && unsupported == 0 ? kExitTrue : kExitFalse;
    }
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UnsupportedQuotient& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace fpf::cli
