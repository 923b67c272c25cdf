// qtcolor: generate, color, verify, analyze and render quadtree subdivisions.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtc/coloring.hpp"
#include "qtc/errors.hpp"
#include "qtc/generate.hpp"
#include "qtc/io.hpp"
#include "qtc/oracle.hpp"
#include "qtc/svg.hpp"

namespace {

using namespace qtc;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;  // violations found / witness not found
constexpr int kExitInputError = 2;

Rational parse_prob(const std::string& text) {
  const auto bad = [&] {
    return FormatError("cannot parse probability \"" + text +
                       "\" (use p/q or a decimal in [0,1])");
  };
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const std::uint64_t num = std::stoull(text.substr(0, slash));
      const std::uint64_t den = std::stoull(text.substr(slash + 1));
      if (den == 0 || num > den) throw bad();
      return {num, den};
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
      const std::string frac = text.substr(dot + 1);
      if (frac.empty() || frac.size() > 18) throw bad();
      const std::uint64_t whole = std::stoull(text.substr(0, dot));
      std::uint64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      const std::uint64_t num = whole * den + std::stoull(frac);
      if (num > den) throw bad();
      return {num, den};
    }
    const std::uint64_t whole = std::stoull(text);
    if (whole > 1) throw bad();
    return {whole, 1};
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
}

AdjacencyMode parse_mode(const std::string& text) {
  if (text == "edge") return AdjacencyMode::edge;
  if (text == "corner") return AdjacencyMode::corner;
  throw FormatError("unknown mode \"" + text + "\" (edge|corner)");
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

struct GlobalFlags {
  bool recanonicalize = false;
};

int cmd_generate(const std::string& out, std::uint64_t seed, int max_depth,
                 const std::string& prob, bool balanced,
                 const std::string& format) {
  RandomCfg cfg;
  cfg.seed = seed;
  cfg.max_depth = max_depth;
  cfg.split_prob = parse_prob(prob);
  cfg.balanced = balanced;
  const Quadtree t = generate_random(cfg);
  emit(out, format == "text" ? tree_to_text(t) : tree_to_json(t));
  std::cerr << "generated " << t.leaf_count() << " leaves, depth " << t.depth()
            << (is_balanced(t) ? ", balanced" : ", unbalanced") << "\n";
  return kExitOk;
}

int cmd_color(const std::string& algo, const std::string& in,
              const std::string& out, const GlobalFlags& flags) {
  const Quadtree t = read_tree(in, flags.recanonicalize);
  Coloring c;
  if (algo == "balanced3") {
    c = color_balanced_3(t);
  } else if (algo == "edge4") {
    c = color_edge_4(t);
  } else if (algo == "corner6") {
    c = color_corner_6(t);
  } else {
    throw FormatError("unknown algorithm \"" + algo +
                      "\" (balanced3|edge4|corner6)");
  }
  emit(out, coloring_to_json(c));
  std::cerr << algo << ": " << c.palette_size << " colors over "
            << t.leaf_count() << " leaves\n";
  return kExitOk;
}

int cmd_verify(const std::string& mode_text, const std::string& tree_path,
               const std::string& colors_path, const GlobalFlags& flags) {
  const AdjacencyMode mode = parse_mode(mode_text);
  const Quadtree t = read_tree(tree_path, flags.recanonicalize);
  const Coloring c = read_coloring(colors_path, flags.recanonicalize);
  const ViolationReport report = verify(t, c, mode);
  std::cout << report.violations.size() << " violations, "
            << report.colors_used << " colors used\n";
  for (const auto& [a, b] : report.violations) {
    std::cout << "  " << a.str() << " ~ " << b.str() << "\n";
  }
  return report.proper() ? kExitOk : kExitFailedCheck;
}

int cmd_chromatic(const std::string& mode_text, const std::string& in,
                  std::uint64_t budget_nodes, const std::string& dump_graph,
                  const GlobalFlags& flags) {
  const AdjacencyMode mode = parse_mode(mode_text);
  const Quadtree t = read_tree(in, flags.recanonicalize);
  const AdjacencyGraph g = build_graph(t, mode);
  if (!dump_graph.empty()) write_file(dump_graph, graph_to_json(g));
  SearchBudget budget;
  budget.max_oracle_nodes = budget_nodes;
  std::cout << chromatic_number(g, budget) << "\n";
  return kExitOk;
}

int cmd_witness(const std::string& mode_text, int target_chi, bool balanced,
                std::uint64_t seed, std::uint64_t max_candidates,
                int max_splits, std::size_t max_leaves,
                const std::string& out) {
  const AdjacencyMode mode = parse_mode(mode_text);
  WitnessGen gen;
  gen.seed = seed;
  gen.exhaustive_splits = max_splits;
  gen.max_leaves = max_leaves;
  SearchBudget budget;
  budget.max_candidates = max_candidates;
  const WitnessReport r = find_witness(mode, target_chi, balanced, gen, budget);
  if (!out.empty()) write_file(out, witness_to_json(r));
  if (r.found) {
    std::cout << "found chi=" << r.chi << " witness with "
              << r.tree->leaf_count() << " leaves after "
              << r.candidates_tried << " candidates\n";
    return kExitOk;
  }
  std::cout << "no chi>=" << target_chi << " witness in "
            << r.candidates_tried << " candidates; best certified chi="
            << r.chi << "\n";
  return kExitFailedCheck;
}

int cmd_render(const std::string& in, const std::string& colors_path,
               const std::string& out, const GlobalFlags& flags) {
  const Quadtree t = read_tree(in, flags.recanonicalize);
  if (colors_path.empty()) {
    emit(out, render_svg(t));
  } else {
    const Coloring c = read_coloring(colors_path, flags.recanonicalize);
    emit(out, render_svg(t, &c));
  }
  return kExitOk;
}

int cmd_bench(const std::string& sizes_text, const std::string& algo,
              std::uint64_t seed, bool compare) {
  std::vector<std::size_t> sizes;
  std::size_t pos = 0;
  while (pos < sizes_text.size()) {
    const auto comma = sizes_text.find(',', pos);
    const std::string tok = sizes_text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    sizes.push_back(std::size_t(std::stoull(tok)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (sizes.empty()) throw FormatError("--sizes needs a comma list");
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    throw FormatError("--sizes must be ascending");
  }

  const auto run_once = [&](const Quadtree& t, Exec exec) {
    const auto t0 = std::chrono::steady_clock::now();
    if (algo == "balanced3") {
      (void)color_balanced_3(t, exec);
    } else if (algo == "edge4") {
      (void)color_edge_4(t);
    } else if (algo == "corner6") {
      (void)color_corner_6(t, exec);
    } else {
      throw FormatError("unknown algorithm \"" + algo + "\"");
    }
    const std::chrono::duration<double, std::milli> dt =
        std::chrono::steady_clock::now() - t0;
    return dt.count();
  };
  const auto median3 = [&](const Quadtree& t, Exec exec) {
    double a = run_once(t, exec), b = run_once(t, exec), c = run_once(t, exec);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    return std::max(a, b);
  };

  std::cout << "algo=" << algo << " seed=" << seed << "\n";
  std::cout << (compare ? "leaves\tserial_ms\tparallel_ms\tspeedup\tratio\n"
                        : "leaves\tms\tratio\n");
  double prev = -1;
  char buf[160];
  for (std::size_t target : sizes) {
    const Quadtree t = generate_approx_size(target, seed);
    const double par_ms = median3(t, Exec::par);
    const double ratio = prev > 0 ? par_ms / prev : 0;
    if (compare) {
      const double seq_ms = median3(t, Exec::seq);
      std::snprintf(buf, sizeof buf, "%zu\t%.2f\t%.2f\t%.2fx\t%s\n",
                    t.leaf_count(), seq_ms, par_ms, seq_ms / par_ms,
                    prev > 0 ? (std::to_string(ratio).substr(0, 4)).c_str()
                             : "-");
    } else {
      std::snprintf(buf, sizeof buf, "%zu\t%.2f\t%s\n", t.leaf_count(), par_ms,
                    prev > 0 ? (std::to_string(ratio).substr(0, 4)).c_str()
                             : "-");
    }
    std::cout << buf << std::flush;
    prev = par_ms;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadtree coloring toolkit"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_flag("--recanonicalize", flags.recanonicalize,
               "re-sort non-canonical input files instead of rejecting them");

  // generate
  auto* gen = app.add_subcommand("generate", "seeded random quadtree");
  std::uint64_t seed = 0;
  int max_depth = 6;
  std::string prob = "1/2", out, format = "json";
  bool balanced = false;
  gen->add_option("--seed", seed, "PRNG seed")->required();
  gen->add_option("--max-depth", max_depth, "maximum level");
  gen->add_option("--split-prob", prob, "split probability (p/q or decimal)");
  gen->add_flag("--balanced", balanced, "2:1 balance the result");
  gen->add_option("--out", out, "output file (default stdout)");
  gen->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  // color
  auto* color = app.add_subcommand("color", "color a quadtree");
  std::string algo, color_in, color_out;
  color->add_option("--algo", algo, "balanced3|edge4|corner6")->required();
  color->add_option("--in", color_in, "tree file")->required();
  color->add_option("--out", color_out, "coloring file (default stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "check a coloring");
  std::string ver_mode = "edge", ver_tree, ver_colors;
  ver->add_option("--mode", ver_mode, "edge|corner");
  ver->add_option("--tree", ver_tree, "tree file")->required();
  ver->add_option("--colors", ver_colors, "coloring file")->required();

  // chromatic
  auto* chrom = app.add_subcommand("chromatic", "exact chromatic number");
  std::string chrom_mode = "edge", chrom_in, dump_graph;
  std::uint64_t chrom_budget = SearchBudget{}.max_oracle_nodes;
  chrom->add_option("--mode", chrom_mode, "edge|corner");
  chrom->add_option("--in", chrom_in, "tree file")->required();
  chrom->add_option("--budget", chrom_budget, "search node budget");
  chrom->add_option("--dump-graph", dump_graph, "write adjacency JSON here");

  // witness
  auto* wit = app.add_subcommand("witness", "search for a high-chi tree");
  std::string wit_mode = "edge", wit_out;
  int target_chi = 4, wit_splits = 6;
  bool wit_balanced = false;
  std::uint64_t wit_seed = 1, wit_budget = 100000;
  std::size_t wit_max_leaves = 60;
  wit->add_option("--mode", wit_mode, "edge|corner");
  wit->add_option("--target-chi", target_chi, "required chromatic number")
      ->required();
  wit->add_flag("--balanced", wit_balanced, "restrict to balanced trees");
  wit->add_option("--seed", wit_seed, "seed for the random phase")->required();
  wit->add_option("--budget", wit_budget, "max candidates");
  wit->add_option("--max-splits", wit_splits, "exhaustive phase split cap");
  wit->add_option("--max-leaves", wit_max_leaves, "candidate size cap");
  wit->add_option("--out", wit_out, "witness certificate file");

  // render
  auto* ren = app.add_subcommand("render", "SVG rendering");
  std::string ren_in, ren_colors, ren_out;
  ren->add_option("--in", ren_in, "tree file")->required();
  ren->add_option("--colors", ren_colors, "optional coloring file");
  ren->add_option("--out", ren_out, "SVG file (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "timing table");
  std::string bench_sizes, bench_algo = "balanced3";
  std::uint64_t bench_seed = 1;
  bool bench_compare = false;
  bench->add_option("--sizes", bench_sizes, "ascending leaf counts, comma-sep")
      ->required();
  bench->add_option("--algo", bench_algo, "balanced3|edge4|corner6");
  bench->add_option("--seed", bench_seed, "tree seed")->required();
  bench->add_flag("--compare", bench_compare,
                  "also time the serial reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (gen->parsed()) {
      return cmd_generate(out, seed, max_depth, prob, balanced, format);
    }
    if (color->parsed()) return cmd_color(algo, color_in, color_out, flags);
    if (ver->parsed()) return cmd_verify(ver_mode, ver_tree, ver_colors, flags);
    if (chrom->parsed()) {
      return cmd_chromatic(chrom_mode, chrom_in, chrom_budget, dump_graph,
                           flags);
    }
    if (wit->parsed()) {
      return cmd_witness(wit_mode, target_chi, wit_balanced, wit_seed,
                         wit_budget, wit_splits, wit_max_leaves, wit_out);
    }
    if (ren->parsed()) return cmd_render(ren_in, ren_colors, ren_out, flags);
    if (bench->parsed()) {
      return cmd_bench(bench_sizes, bench_algo, bench_seed, bench_compare);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
