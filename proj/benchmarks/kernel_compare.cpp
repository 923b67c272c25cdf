// Times the serial reference path against the OpenMP path for each
// data-parallel kernel. Usage: kernel_compare [leaf_count] [seed]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "qtc/coloring.hpp"
#include "qtc/exec.hpp"
#include "qtc/generate.hpp"
#include "qtc/oracle.hpp"

using namespace qtc;

namespace {

double time_ms(const std::function<void()>& fn) {
  // Median of three.
  double best[3];
  for (double& slot : best) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double, std::milli> dt =
        std::chrono::steady_clock::now() - t0;
    slot = dt.count();
  }
  if (best[0] > best[1]) std::swap(best[0], best[1]);
  if (best[1] > best[2]) std::swap(best[1], best[2]);
  return std::max(best[0], best[1]);
}

void row(const char* name, const std::function<void(Exec)>& kernel) {
  const double seq = time_ms([&] { kernel(Exec::seq); });
  const double par = time_ms([&] { kernel(Exec::par); });
  std::printf("%-22s %10.2f %10.2f %7.2fx\n", name, seq, par, seq / par);
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t leaves = argc > 1 ? std::strtoull(argv[1], nullptr, 10)
                                      : 1'000'000;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;

  const Quadtree tree = generate_approx_size(leaves, seed);
  const Coloring c3 = color_balanced_3(tree);
  const Coloring c6 = color_corner_6(tree);

  std::printf("tree: %zu leaves, depth %d, %d threads\n", tree.leaf_count(),
              tree.depth(), hardware_threads());
  std::printf("%-22s %10s %10s %8s\n", "kernel", "serial_ms", "omp_ms",
              "speedup");
  row("is_balanced", [&](Exec e) { (void)is_balanced(tree, e); });
  row("color_balanced_3", [&](Exec e) { (void)color_balanced_3(tree, e); });
  row("build_graph edge",
      [&](Exec e) { (void)build_graph(tree, AdjacencyMode::edge, e); });
  row("build_graph corner",
      [&](Exec e) { (void)build_graph(tree, AdjacencyMode::corner, e); });
  row("verify edge",
      [&](Exec e) { (void)verify(tree, c3, AdjacencyMode::edge, e); });
  row("verify corner",
      [&](Exec e) { (void)verify(tree, c6, AdjacencyMode::corner, e); });
  row("color_corner_6", [&](Exec e) { (void)color_corner_6(tree, e); });

  WitnessGen gen;
  gen.exhaustive_splits = 5;
  SearchBudget budget;
  budget.max_candidates = 1200;
  row("witness scan", [&](Exec e) {
    (void)find_witness(AdjacencyMode::edge, 4, false, gen, budget, e);
  });
  return 0;
}
