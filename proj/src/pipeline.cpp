#include "vtc/pipeline.hpp"

#include "vtc/cycle_graph.hpp"
#include "vtc/error.hpp"
#include "vtc/induced_cycle.hpp"

namespace vtc {

namespace {

constexpr std::size_t kSymmetryMinDiameter = 20;
constexpr std::size_t kExhaustiveInducedLimit = 64;

void keep_longer(std::optional<DirectedCycle>& best, const DirectedCycle& c) {
  if (!best || c.length() > best->length()) best = c;
}

}  // namespace

PipelineReport omega_n13_pipeline(const Digraph& d, const AutomorphismFamily& fam,
                                  PipelineOptions options) {
  const std::size_t n = d.vertex_count();
  if (n < 2) throw InvalidInput("pipeline needs at least 2 vertices");
  for (const auto& phi : fam.permutations) {
    if (phi.size() != n || !is_automorphism(d, phi)) {
      throw InvalidInput("family member is not an automorphism");
    }
  }
  if (!acts_transitively(fam, n)) throw InvalidInput("family does not act transitively");
  const auto diam = directed_diameter(d);
  if (!diam) throw InvalidInput("digraph is not strongly connected");

  PipelineReport report;
  report.n = n;
  report.diameter = *diam;
  const std::uint64_t dd = *diam, nn = n;
  report.small_diameter = dd * dd * dd <= nn * nn;
  report.trace.push_back("d = " + std::to_string(dd) + ", n = " + std::to_string(nn) +
                         (report.small_diameter ? ": d^3 <= n^2, expansion branch"
                                                : ": d^3 > n^2, cycle-graph branch"));

  std::optional<DirectedCycle> best;
  auto run_dfs = [&] {
    report.dfs = dfs_long_cycle(d, Ratio(1, 3 * static_cast<std::int64_t>(dd)));
    report.trace.push_back("path extension: path of " +
                           std::to_string(report.dfs->path.vertices.size()) + " vertices, |U| = " +
                           std::to_string(report.dfs->descendant_set.size()) + ", cycle length " +
                           std::to_string(report.dfs->cycle.length()));
    keep_longer(best, report.dfs->cycle);
  };

  if (report.small_diameter) {
    run_dfs();
  } else {
    const auto cycles = enumerate_directed_cycles(d, options.limits, options.threads);
    report.cycle_count = cycles.cycles.size();
    report.cycle_graph_complete = cycles.complete();
    report.trace.push_back("enumerated " + std::to_string(report.cycle_count) + " cycles" +
                           (cycles.complete() ? "" : " (truncated)"));
    if (!cycles.complete()) {
      report.partial = true;
      run_dfs();
    } else {
      const CycleGraph cg = build_cycle_graph(cycles);
      for (const auto& c : cg.cycles) keep_longer(report.incidental, c);
      const AutomorphismFamily lifted = lift_automorphisms(d, fam, cg);
      report.nearly_transitive = is_nearly_transitive(cg.graph, lifted);
      if (!report.nearly_transitive) {
        throw VerificationError("lifted family does not witness near transitivity");
      }
      report.cycle_graph_diameter = diameter(cg.graph);
      report.trace.push_back(
          "cycle graph diameter " +
          (report.cycle_graph_diameter ? std::to_string(*report.cycle_graph_diameter)
                                       : std::string("infinite")));
      report.induced_method = "none";
      if (report.cycle_graph_diameter && *report.cycle_graph_diameter >= kSymmetryMinDiameter) {
        const auto induced = induced_cycle_via_symmetry(cg.graph, lifted, options.budget);
        report.induced_cycle = induced.cycle;
        report.induced_method = induced.by_construction ? "symmetry" : "exhaustive";
        if (!induced.by_construction) report.trace.push_back("construction step failed: " + induced.failed_step);
      } else if (cg.size() <= kExhaustiveInducedLimit) {
        report.induced_cycle = brute_longest_induced_cycle(cg.graph, options.budget).best;
        report.induced_method = "exhaustive";
      }
      if (report.induced_cycle) {
        report.trace.push_back("induced cycle of length " +
                               std::to_string(report.induced_cycle->size()) + " in the cycle graph");
        if (report.induced_cycle->size() >= 4) {
          report.stitched = stitch_directed_cycle(d, cg, *report.induced_cycle);
          report.trace.push_back("stitched cycle length " + std::to_string(report.stitched->length()));
          keep_longer(best, *report.stitched);
        }
      }
      if (report.incidental) keep_longer(best, *report.incidental);
    }
  }

  report.cycle = *best;
  const std::uint64_t len = report.cycle.length();
  const std::uint64_t k = kPipelineConstantDenominator;
  report.floor_holds = k * k * k * len * len * len >= nn;
  if (!report.floor_holds) {
    throw VerificationError("cycle of length " + std::to_string(len) + " misses n^(1/3)/9");
  }
  return report;
}

}  // namespace vtc
