// intspec: intersection densities of transitive group actions.
//
// Exit codes: 0 certified (or all criteria passed), 2 uncertified (or a
// criterion failed), 1 usage error.
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "intspec/acceptance.hpp"
#include "intspec/dgraph.hpp"
#include "intspec/mis.hpp"
#include "intspec/report.hpp"
#include "intspec/specs.hpp"
#include "intspec/spectrum.hpp"

using namespace intspec;

namespace {

// Groups above this order need --extended (PSL(2,13) has order 1092).
constexpr std::uint64_t kStandardTierOrder = 1100;
constexpr std::uint64_t kAglCap = 5000;

struct RunConfig {
  std::string group, subgroup, format = "md", strategy = "auto", weighting = "eq6.1";
  std::string cache_dir, input;
  std::uint64_t budget = 100000000;
  unsigned threads = 1;
  bool extended = false, no_symmetry = false;
  std::uint32_t n = 1, q = 0, i = 1;
  std::vector<int> criteria;
  bool verbose = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DensityOptions density_options(const RunConfig& cfg)
{
  DensityOptions o;
  o.strategy = parse_strategy(cfg.strategy);
  o.node_budget = cfg.budget;
  o.symmetry = !cfg.no_symmetry;
  return o;
}

void require_tier(const Group& G, const RunConfig& cfg)
{
  if (G.order() > kStandardTierOrder && !cfg.extended)
    throw UsageError(G.spec() + " has order " + std::to_string(G.order()) + ", above the standard tier (" +
                     std::to_string(kStandardTierOrder) + "); pass --extended to run it");
}

int cmd_density(const RunConfig& cfg)
{
  GroupPtr G = parse_group_spec(cfg.group);
  const Subgroup H = parse_subgroup_spec(*G, cfg.subgroup);
  const DensityOptions opts = density_options(cfg);
  ResultCache cache(cfg.cache_dir);
  std::optional<DensityReport> r = cache.lookup(G->spec(), cfg.subgroup, opts);
  if (!r) {
    r = intersection_density(G, H, cfg.subgroup, opts);
    cache.remember(G->spec(), cfg.subgroup, opts, *r);
  }
  if (cfg.format == "json") std::cout << to_json(*r).dump(2) << "\n";
  else if (cfg.format == "csv") std::cout << density_csv({*r});
  else std::cout << density_markdown({*r});
  return r->certified ? 0 : 2;
}

int cmd_spectrum(const RunConfig& cfg)
{
  GroupPtr G = parse_group_spec(cfg.group);
  require_tier(*G, cfg);
  ResultCache cache(cfg.cache_dir);
  const SpectrumReport s =
      intersection_spectrum(G, density_options(cfg), cfg.threads, cache.enabled() ? &cache : nullptr);
  if (cfg.format == "json") std::cout << to_json(s).dump(2) << "\n";
  else if (cfg.format == "csv") std::cout << density_csv(s.rows);
  else std::cout << spectrum_markdown(s);
  for (const auto& r : s.rows)
    if (!r.certified) return 2;
  return 0;
}

int cmd_eigs(const RunConfig& cfg)
{
  GroupPtr G = parse_group_spec(cfg.group);
  std::optional<Subgroup> H;
  std::string sub = cfg.subgroup;
  if (cfg.weighting == "uniform") {
    // The registered family of the group when no action is named.
    if (sub.empty() && G->kind() == GroupKind::PSL2 && G->q() % 2 == 1)
      sub = G->q() % 4 == 3 ? "family=U" : "family=borel";
    if (sub.empty()) throw UsageError("--weighting uniform needs --subgroup for this group");
    H = parse_subgroup_spec(*G, sub);
  }
  const EigenvalueReport e = weighted_spectrum(G, cfg.weighting, H ? &*H : nullptr, sub);
  if (cfg.format == "json") std::cout << to_json(e).dump(2) << "\n";
  else if (cfg.format == "csv") std::cout << eigen_csv(e);
  else std::cout << eigen_markdown(e);
  return 0;
}

int cmd_solve(const RunConfig& cfg)
{
  BitGraph g;
  if (cfg.input.empty() || cfg.input == "-") {
    g = BitGraph::read_dimacs(std::cin);
  } else {
    std::ifstream in(cfg.input);
    if (!in) throw UsageError("cannot open " + cfg.input);
    g = BitGraph::read_dimacs(in);
  }
  SolveOptions so;
  so.node_budget = cfg.budget;
  const SolveResult r = max_coclique(g, so);
  const bool optimal = r.status == SolveStatus::Optimal;
  if (cfg.format == "json") {
    nlohmann::json j{{"schema", "intspec.solve/1"},
                     {"vertices", g.size()},
                     {"edges", g.edge_count()},
                     {"coclique_size", r.best},
                     {"optimal", optimal},
                     {"certificate", r.certificate},
                     {"nodes", r.nodes}};
    // DIMACS numbering is 1-based.
    std::vector<std::uint32_t> one_based;
    for (auto v : r.witness) one_based.push_back(v + 1);
    j["witness"] = one_based;
    std::cout << j.dump(2) << "\n";
  } else {
    const char* sep = cfg.format == "csv" ? "," : " ";
    if (cfg.format == "csv") std::cout << "vertices,edges,coclique_size,optimal,nodes\n";
    std::cout << g.size() << sep << g.edge_count() << sep << r.best << sep << (optimal ? "optimal" : "lower-bound")
              << sep << r.nodes << "\n";
    if (cfg.format != "csv") {
      std::cout << "witness:";
      for (auto v : r.witness) std::cout << " " << v + 1;
      std::cout << "\n";
    }
  }
  return optimal ? 0 : 2;
}

int cmd_verify(const RunConfig& cfg)
{
  int failed = 0;
  run_acceptance(cfg.criteria, [&](const CriterionResult& r) {
    std::printf("[%s] %d %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
    if (cfg.verbose || !r.pass)
      for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  });
  return failed ? 2 : 0;
}

int cmd_agl(const RunConfig& cfg)
{
  if (agl_order(cfg.n, cfg.q) > kAglCap && !cfg.extended)
    throw UsageError("|AGL(" + std::to_string(cfg.n) + "," + std::to_string(cfg.q) + ")| exceeds " +
                     std::to_string(kAglCap) + "; pass --extended to run it");
  const DensityReport r = agl_density_certificate(cfg.n, cfg.q, cfg.i);
  if (cfg.format == "json") std::cout << to_json(r).dump(2) << "\n";
  else if (cfg.format == "csv") std::cout << density_csv({r});
  else std::cout << density_markdown({r});
  return r.certified ? 0 : 2;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Intersection densities of transitive group actions"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--budget", cfg.budget, "Solver node budget per search");
  app.add_option("--threads", cfg.threads, "Worker threads for independent subgroup rows")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cfg.cache_dir, "Result cache directory")->envname("INTSPEC_CACHE_DIR");
  app.add_flag("--extended", cfg.extended, "Allow groups above the standard size tier");

  auto* density = app.add_subcommand("density", "Intersection density of one action");
  density->add_option("--group", cfg.group, "Group spec, e.g. PSL2:q=7")->required();
  density->add_option("--subgroup", cfg.subgroup, "Subgroup spec, e.g. family=U or index=3")->required();
  density->add_option("--strategy", cfg.strategy, "auto, exact-only or bound-only")
      ->check(CLI::IsMember({"auto", "exact-only", "bound-only"}));
  density->add_flag("--no-symmetry", cfg.no_symmetry, "Disable symmetric branching in the solver");

  auto* spectrum = app.add_subcommand("spectrum", "Densities of every subgroup class");
  spectrum->add_option("--group", cfg.group, "Group spec")->required();
  spectrum->add_option("--strategy", cfg.strategy, "auto, exact-only or bound-only")
      ->check(CLI::IsMember({"auto", "exact-only", "bound-only"}));
  spectrum->add_flag("--no-symmetry", cfg.no_symmetry, "Disable symmetric branching in the solver");

  auto* eigs = app.add_subcommand("eigs", "Eigenvalues of a weighted derangement matrix");
  eigs->add_option("--group", cfg.group, "Group spec")->required();
  eigs->add_option("--weighting", cfg.weighting, "eq6.1, eq7.3:r=R or uniform");
  eigs->add_option("--subgroup", cfg.subgroup, "Action for the uniform weighting");

  auto* solve = app.add_subcommand("solve", "Maximum coclique of a DIMACS graph");
  solve->add_option("input", cfg.input, "DIMACS file, '-' for stdin");

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--criteria", cfg.criteria, "Criterion ids (default: all)");
  verify->add_flag("-v,--verbose", cfg.verbose, "Print every sub-check");

  auto* agl = app.add_subcommand("agl", "Certified density of AGL(n,q) on cosets of E_i");
  agl->add_option("--n", cfg.n, "Dimension")->check(CLI::PositiveNumber);
  agl->add_option("--q", cfg.q, "Field order")->required();
  agl->add_option("--i", cfg.i, "log_p |E_i|")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*density) return cmd_density(cfg);
    if (*spectrum) return cmd_spectrum(cfg);
    if (*eigs) return cmd_eigs(cfg);
    if (*solve) return cmd_solve(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*agl) return cmd_agl(cfg);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
