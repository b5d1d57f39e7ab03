// Command-line front end: construct, analyze, verify, search.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vtc/automorphism.hpp"
#include "vtc/constructions.hpp"
#include "vtc/error.hpp"
#include "vtc/graph_io.hpp"
#include "vtc/report.hpp"

namespace {

using namespace vtc;

enum class Level { warn, info, debug };

Level log_level() {
  const char* env = std::getenv("VTC_LOG");
  if (!env) return Level::warn;
  const std::string s(env);
  if (s == "debug") return Level::debug;
  if (s == "info") return Level::info;
  return Level::warn;
}

void log(Level level, const std::string& msg) {
  static const Level threshold = log_level();
  if (level <= threshold) std::cerr << "[vtc] " << msg << '\n';
}

struct Options {
  std::string out;
  std::string format;
  std::uint64_t budget_nodes = SearchBudget{}.max_expansions;
  std::size_t max_cycles = kDefaultMaxCycles;
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

struct Instance {
  std::string name;
  Digraph digraph;
  std::optional<CayleySpec> spec;
};

// Writes to --out, or stdout when it is empty.
void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw InvalidInput("cannot open " + opt.out);
  f << text;
}

std::size_t positive(const std::string& token, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || v == 0) throw InvalidInput(what + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

CayleySpec dihedral(std::size_t n) {
  return CayleySpec{dihedral_group(n), {1, static_cast<Element>(n)}};
}

Instance from_generator(const std::string& gen, SearchBudget budget) {
  std::istringstream in(gen);
  std::string kind, a, b;
  in >> kind >> a >> b;
  auto spec_instance = [&](CayleySpec spec) {
    Digraph d = cayley_digraph(spec);
    return Instance{gen, std::move(d), std::move(spec)};
  };
  if (kind == "cycle") return spec_instance(CayleySpec{cyclic_group(positive(a, "n")), {1}});
  if (kind == "product") return spec_instance(cycle_product_spec(positive(a, "n1"), positive(b, "n2")));
  if (kind == "toroidal") return spec_instance(toroidal_gadget_spec(positive(a, "n")));
  if (kind == "dihedral") return spec_instance(dihedral(positive(a, "n")));
  if (kind == "complete") {
    const std::size_t n = positive(a, "n");
    std::vector<Element> gens;
    for (Element g = 1; g < n; ++g) gens.push_back(g);
    return spec_instance(CayleySpec{cyclic_group(n), gens});
  }
  if (kind == "figure1") return Instance{gen, figure1_chain(positive(a, "k"), budget), std::nullopt};
  if (kind == "cayley") {
    std::ifstream f(a);
    if (!f) throw InvalidInput("cannot open " + a);
    return spec_instance(parse_cayley_spec(f));
  }
  throw InvalidInput("unknown generator '" + kind + "'");
}

Instance load(const std::string& file, const std::string& gen, SearchBudget budget) {
  if (!gen.empty()) return from_generator(gen, budget);
  if (file.empty()) throw InvalidInput("give an edge-list file or --gen");
  return Instance{file, read_edge_list_file(file), std::nullopt};
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string kind;
  std::size_t n = 1, n1 = 2, n2 = 2, k = 1;
  std::string group, gens;
};

int cmd_construct(const ConstructArgs& a, const Options& opt) {
  const SearchBudget budget{opt.budget_nodes};
  Report report;
  report.operation = "construct";
  Digraph d;
  if (a.kind == "toroidal") {
    d = toroidal_gadget(a.n, budget);
    report.parameters = {{"n", a.n}};
    const auto checks = verify_toroidal_gadget(d, a.n, budget);
    for (const auto& c : checks.checks) report.assert_that(c.property, c.verdict != Verdict::no);
  } else if (a.kind == "figure1") {
    d = figure1_chain(a.k, budget);
    report.parameters = {{"k", a.k}};
    const auto checks = verify_figure1_chain(d, a.k, budget);
    for (const auto& c : checks.checks) report.assert_that(c.property, c.verdict != Verdict::no);
  } else if (a.kind == "product") {
    d = directed_cycle_product(a.n1, a.n2);
    report.parameters = {{"n1", a.n1}, {"n2", a.n2}};
    report.assert_that("2-regular", regularity(d) == 2u);
  } else if (a.kind == "cayley") {
    d = cayley_digraph(parse_cayley_spec(a.group, a.gens));
    report.parameters = {{"group", a.group}, {"gens", a.gens}};
    report.assert_that("strongly connected", is_strongly_connected(d));
  } else {
    throw InvalidInput("unknown construction '" + a.kind + "'");
  }
  report.instance = describe(a.kind, d);

  const std::string graph_text = opt.format == "dot" ? to_dot(d, true) : to_edge_list(d);
  emit(opt, graph_text);
  (opt.out.empty() ? std::cerr : std::cout) << report.to_json().dump(2) << '\n';
  return report.all_hold() ? 0 : 1;
}

// ------------------------------------------------------------------ analyze

struct AnalyzeArgs {
  std::string file, gen, dump;
  std::vector<std::string> which;
  std::size_t samples = 10000;
};

std::optional<AutomorphismFamily> family_of(const Instance& inst, SearchBudget budget) {
  if (inst.spec) return left_translations(*inst.spec);
  auto [verdict, fam] = transitive_family(inst.digraph, budget);
  if (verdict != Verdict::yes) return std::nullopt;
  return fam;
}

int cmd_analyze(const AnalyzeArgs& a, const Options& opt) {
  const SearchBudget budget{opt.budget_nodes};
  const Instance inst = load(a.file, a.gen, budget);
  const Digraph& d = inst.digraph;
  const std::size_t n = d.vertex_count();
  log(Level::info, "seed " + std::to_string(opt.seed));
  log(Level::info, "analyzing " + inst.name + " (" + std::to_string(n) + " vertices)");

  std::optional<AutomorphismFamily> fam;
  bool family_known = false;
  auto family = [&]() -> const std::optional<AutomorphismFamily>& {
    if (!family_known) {
      fam = family_of(inst, SearchBudget{std::min<std::uint64_t>(opt.budget_nodes, 1'000'000)});
      family_known = true;
      log(Level::debug, fam ? "transitivity certified" : "transitivity not certified");
    }
    return fam;
  };

  Json reports = Json::array();
  bool ok = true;
  auto push = [&](Report& r) {
    r.instance = describe(inst.name, d);
    ok = ok && r.all_hold();
    reports.push_back(r.to_json());
  };

  for (const auto& op : a.which) {
    Report r;
    r.operation = op;
    log(Level::info, "running " + op);
    if (op == "diameter") {
      const auto diam = directed_diameter(d);
      r.result = {{"strongly_connected", diam.has_value()},
                  {"diameter", diam ? Json(*diam) : Json(nullptr)}};
      if (auto pair = diameter_pair(d)) r.certificate = {{"from", pair->first}, {"to", pair->second}};
    } else if (op == "expansion") {
      const bool exact = n <= kMaxExactExpansionVertices;
      const auto rep = exact ? expansion_exact(d, opt.threads) : expansion_sampled(d, a.samples, opt.seed);
      r.parameters = exact ? Json{{"mode", "exact"}}
                           : Json{{"mode", "sampled"}, {"samples", a.samples}, {"seed", opt.seed}};
      r.result = to_json(rep);
      const auto diam = directed_diameter(d);
      if (exact && diam && family()) {
        r.assert_that("alpha >= 1/(3d)", satisfies_transitive_bound(rep, *diam));
      }
    } else if (op == "dfs-cycle") {
      std::optional<Ratio> alpha;
      if (n >= 2 && n <= kMaxExactExpansionVertices && is_strongly_connected(d)) {
        alpha = expansion_exact(d, opt.threads).alpha_lower;
      }
      const auto res = dfs_long_cycle(d, alpha);
      r.parameters = {{"alpha", alpha ? Json(to_string(*alpha)) : Json(nullptr)}};
      r.result = to_json(res);
      r.assert_that("n/3 <= |U| <= 2n/3", 3 * res.descendant_set.size() >= n &&
                                                3 * res.descendant_set.size() <= 2 * n);
      if (alpha) r.assert_that("cycle >= alpha n / 3", Ratio(static_cast<std::int64_t>(res.cycle.length())) >= *res.guarantee);
    } else if (op == "long-path") {
      const bool certified = family().has_value();
      const auto res = long_path(d, certified);
      r.parameters = {{"certified_transitive", certified}};
      r.result = to_json(res);
      if (certified) r.assert_that("length >= floor(sqrt(n)/3)", res.path.length() >= res.floor_bound);
    } else if (op == "cycle-graph") {
      const bool transitive = family().has_value();
      EnumerationLimits limits{std::nullopt, opt.max_cycles};
      const auto res = cycle_graph_diameter_check(d, transitive, limits, opt.threads);
      r.parameters = {{"max_cycles", opt.max_cycles}, {"transitive", transitive}};
      r.result = to_json(res);
      if (res.asserted) r.assert_that("diam C(D) >= d/l - 1", res.holds);
      if (!a.dump.empty()) {
        std::ofstream f(a.dump);
        write_cycle_graph(f, build_cycle_graph(enumerate_directed_cycles(d, limits, opt.threads)));
      }
    } else if (op == "pipeline-n13") {
      if (!family()) throw InvalidInput("pipeline needs a certified vertex-transitive digraph");
      PipelineOptions po;
      po.limits = EnumerationLimits{std::nullopt, opt.max_cycles};
      po.budget = budget;
      po.threads = opt.threads;
      const auto res = omega_n13_pipeline(d, *family(), po);
      r.parameters = {{"max_cycles", opt.max_cycles}};
      r.result = to_json(res);
      const std::uint64_t dd = res.diameter, nn = n;
      r.assert_that("branch matches d^3 <= n^2", res.small_diameter == (dd * dd * dd <= nn * nn));
      r.assert_that("cycle valid", is_valid_cycle(d, res.cycle));
      r.assert_that("729 |C|^3 >= n", res.floor_holds);
    } else {
      throw InvalidInput("unknown analysis '" + op + "'");
    }
    push(r);
  }
  emit(opt, reports.dump(2) + "\n");
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::size_t max_order = 24;
  std::size_t max_k = 4;
  std::size_t max_n = 2;
  std::string corpus = "small-cayley";
};

int cmd_verify(const VerifyArgs& a, const Options& opt) {
  const SearchBudget budget{opt.budget_nodes};
  if (a.corpus != "small-cayley") throw InvalidInput("unknown corpus '" + a.corpus + "'");
  SuiteResult result;
  if (a.suite == "trotter-erdos") {
    result = verify_trotter_erdos(a.max_order, budget);
  } else if (a.suite == "divisibility") {
    result = verify_divisibility(a.max_order, opt.threads);
  } else if (a.suite == "figure1") {
    result = verify_figure1(a.max_k, a.max_n, budget);
  } else if (a.suite == "lemma21") {
    result = verify_lemma21(small_cayley_corpus(), opt.threads);
  } else if (a.suite == "dfs-cycle") {
    result = verify_dfs_cycle(small_cayley_corpus(), opt.threads);
  } else if (a.suite == "long-path") {
    result = verify_long_path(small_cayley_corpus());
  } else if (a.suite == "lemma27") {
    result = verify_lemma27(stitching_hosts(), budget, opt.threads);
  } else {
    throw InvalidInput("unknown suite '" + a.suite + "'");
  }
  if (opt.format == "json") {
    emit(opt, to_json(result).dump(2) + "\n");
  } else {
    std::ostringstream csv;
    write_suite_csv(csv, result);
    emit(opt, csv.str());
  }
  log(Level::info, a.suite + ": " + std::to_string(result.rows.size()) + " cases, " +
                       std::to_string(result.failures) + " failures");
  return result.passed() ? 0 : 1;
}

// ------------------------------------------------------------------- search

struct SearchArgs {
  std::string kind;
  std::uint64_t max_d = 20;
  std::uint64_t max_p = 100;
};

int cmd_search(const SearchArgs& a, const Options& opt) {
  const bool json = opt.format == "json";
  std::ostringstream out;
  log(Level::info, "search " + a.kind + " (threads " + std::to_string(opt.threads) + ")");
  if (a.kind == "prime-partitionable") {
    const auto hits = search_prime_partitionable(a.max_d, opt.threads);
    if (json || opt.format.empty()) {
      Json j = Json::array();
      for (const auto& h : hits) {
        j.push_back({{"d", h.d}, {"mask", h.mask}, {"certificate", to_json(h.certificate)}});
      }
      out << j.dump(2) << '\n';
    } else {
      out << "d,mask,n1,n2,valid\n";
      for (const auto& h : hits) {
        out << h.d << ',' << h.mask << ',' << h.certificate.n1 << ',' << h.certificate.n2 << ','
            << (h.certificate.valid ? 1 : 0) << '\n';
      }
    }
  } else if (a.kind == "motohashi") {
    const auto pairs = motohashi_pairs(a.max_p, opt.threads);
    if (json) {
      Json j = Json::array();
      for (const auto& p : pairs) j.push_back(to_json(p));
      out << j.dump(2) << '\n';
    } else {
      out << "p,q,bound_ok,size_guard\n";
      for (const auto& p : pairs) {
        out << p.p << ',' << p.q << ',' << (p.bound_ok ? 1 : 0) << ','
            << (size_guard(p.p, p.q) ? 1 : 0) << '\n';
      }
    }
  } else if (a.kind == "theorem11") {
    const auto rows = theorem11_report(a.max_p, opt.threads);
    if (json) {
      Json j = Json::array();
      for (const auto& r : rows) j.push_back(to_json(r));
      out << j.dump(2) << '\n';
    } else {
      write_theorem11_csv(out, rows);
    }
  } else {
    throw InvalidInput("unknown search '" + a.kind + "'");
  }
  emit(opt, out.str());
  return 0;
}

int fail(const std::string& type, const std::string& message, int code) {
  Json j{{"schema", kReportSchema}, {"error", {{"type", type}, {"message", message}}}};
  std::cout << j.dump(2) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long cycles in vertex-transitive digraphs: constructions, oracles, searches"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--out", opt.out, "Output file (default stdout)");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
  app.add_option("--budget-nodes", opt.budget_nodes, "Node-expansion budget for exact searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-cycles", opt.max_cycles, "Cycle enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed for sampled modes");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a digraph and write it as an edge list");
  construct->add_option("kind", ca.kind, "cayley | product | figure1 | toroidal")->required();
  construct->add_option("--n", ca.n, "Toroidal gadget index");
  construct->add_option("--n1", ca.n1, "First cycle length");
  construct->add_option("--n2", ca.n2, "Second cycle length");
  construct->add_option("--k", ca.k, "Number of gadget blocks");
  construct->add_option("--group", ca.group, "\"cyclic n\" or \"product n1 n2\"");
  construct->add_option("--gens", ca.gens, "Generators, e.g. \"(1,0),(0,1)\" or \"1 3\"");

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Run analyses on a digraph");
  analyze->add_option("file", aa.file, "Edge-list file");
  analyze->add_option("--gen", aa.gen,
                      "Generator instead of a file: cycle n | product n1 n2 | toroidal n | "
                      "dihedral n | complete n | figure1 k | cayley FILE");
  analyze->add_option("--which", aa.which, "diameter, expansion, dfs-cycle, long-path, cycle-graph, pipeline-n13")
      ->delimiter(',')
      ->required();
  analyze->add_option("--dump", aa.dump, "Write the cycle graph here (cycle-graph analysis)");
  analyze->add_option("--samples", aa.samples, "Subsets for sampled expansion");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", va.suite,
                     "trotter-erdos | divisibility | figure1 | lemma21 | dfs-cycle | long-path | lemma27")
      ->required();
  verify->add_option("--max-order", va.max_order, "Largest n1 n2 for product suites");
  verify->add_option("--max-k", va.max_k, "Largest gadget chain");
  verify->add_option("--max-n", va.max_n, "Largest toroidal gadget index");
  verify->add_option("--corpus", va.corpus, "Host corpus");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Number-theoretic searches");
  search->add_option("kind", sa.kind, "prime-partitionable | motohashi | theorem11")->required();
  search->add_option("--max-d", sa.max_d, "Largest d");
  search->add_option("--max-p", sa.max_p, "Largest p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors count as invalid input
  }

  try {
    if (*construct) return cmd_construct(ca, opt);
    if (*analyze) return cmd_analyze(aa, opt);
    if (*verify) return cmd_verify(va, opt);
    if (*search) return cmd_search(sa, opt);
  } catch (const InvalidInput& e) {
    return fail("invalid_input", e.what(), 2);
  } catch (const VerificationError& e) {
    return fail("verification", e.what(), 3);
  } catch (const std::exception& e) {
    return fail("error", e.what(), 4);
  }
  return 0;
}
