// nzflow: nowhere-zero integer k-flows on finite graphs.
//
// Subcommands: solve, verify, pipeline, group, quotient, gen.
// Exit codes: 0 success, 1 proven infeasible (or failed verification),
// 2 budget/IO/internal error, 3 pipeline hypotheses unmet.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nzflow/error.hpp"
#include "nzflow/families.hpp"
#include "nzflow/flow.hpp"
#include "nzflow/io.hpp"
#include "nzflow/pipeline.hpp"
#include "nzflow/quotient.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;
constexpr int kExitOutsideScope = 3;

long long budget_from_env(long long fallback) {
  if (const char* env = std::getenv("NZFLOW_BUDGET")) {
    char* end = nullptr;
    long long parsed = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
    std::cerr << "warning: ignoring malformed NZFLOW_BUDGET\n";
  }
  return fallback;
}

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
  } else {
    nzflow::io::save(path, contents);
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

int run_solve(const std::string& graph_path, int k, long long budget,
              const std::string& out_path) {
  nzflow::Graph graph = nzflow::io::load_graph(graph_path);
  auto flow = nzflow::solve_nz_kflow(graph, k, {budget});
  if (!flow) {
    std::cout << "INFEASIBLE\n";
    return kExitInfeasible;
  }
  emit(out_path, nzflow::io::to_string(*flow));
  return kExitSolved;
}

int run_verify(const std::string& graph_path, const std::string& flow_path) {
  nzflow::Graph graph = nzflow::io::load_graph(graph_path);
  nzflow::Flow flow = nzflow::io::load_flow(flow_path);
  auto report = nzflow::verify_flow(graph, flow);
  std::cout << report.to_string() << "\n";
  return report.nowhere_zero ? kExitSolved : kExitInfeasible;
}

int run_group(const std::string& group_path) {
  nzflow::PermGroup group = nzflow::io::load_group(group_path);
  auto series = nzflow::derived_series(group);
  std::cout << "order " << group.order();
  if (series.solvable) {
    std::cout << ", solvable, derived length " << series.derived_length << ", series ";
    for (std::size_t i = 0; i < series.terms.size(); ++i) {
      if (i) std::cout << ">";
      std::cout << series.terms[i].order();
    }
  } else {
    std::cout << ", NOT solvable";
  }
  std::cout << "\n";
  return kExitSolved;
}

int run_pipeline(const std::string& graph_path, const std::string& group_path, bool fallback,
                 bool per_component, const std::vector<std::string>& component_groups,
                 long long budget, const std::string& out_path, const std::string& trace_path) {
  nzflow::Graph graph = nzflow::io::load_graph(graph_path);
  nzflow::PipelineOptions opts;
  opts.fallback = fallback;
  opts.solver_budget = budget;

  if (per_component) {
    auto comps = nzflow::components(graph);
    std::vector<std::string> group_paths = component_groups;
    if (!group_path.empty()) group_paths.insert(group_paths.begin(), group_path);
    if (group_paths.size() != comps.size()) {
      std::cerr << "per-component mode: " << comps.size() << " components but "
                << group_paths.size() << " group files\n";
      return kExitError;
    }
    nzflow::Flow combined;
    combined.k = 3;
    combined.orientation.dir.assign(graph.edge_count(), {-1, -1});
    combined.values.assign(graph.edge_count(), 0);
    std::string traces;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      nzflow::PermGroup grp = nzflow::io::load_group(group_paths[c]);
      auto result = nzflow::solve_three_flow(comps[c].graph, grp, opts);
      traces += "# component " + std::to_string(c) + "\n" + result.trace.to_string();
      if (result.status == nzflow::PipelineStatus::outside_scope) {
        std::cout << "OUTSIDE SCOPE (component " << c << "): " << result.reason << "\n";
        return kExitOutsideScope;
      }
      if (result.status == nzflow::PipelineStatus::infeasible) {
        std::cout << "INFEASIBLE (component " << c << "): " << result.reason << "\n";
        return kExitInfeasible;
      }
      for (int e = 0; e < comps[c].graph.edge_count(); ++e) {
        int parent = comps[c].edge_map[e];
        auto [lt, lh] = result.flow->orientation.dir[e];
        combined.orientation.dir[parent] = {comps[c].vertex_map[lt], comps[c].vertex_map[lh]};
        combined.values[parent] = result.flow->values[e];
      }
    }
    if (!trace_path.empty()) nzflow::io::save(trace_path, traces + nzflow::io::to_string(combined));
    emit(out_path, nzflow::io::to_string(combined));
    return kExitSolved;
  }

  nzflow::PermGroup grp = nzflow::io::load_group(group_path);
  auto result = nzflow::solve_three_flow(graph, grp, opts);
  if (result.status == nzflow::PipelineStatus::outside_scope) {
    std::cout << "OUTSIDE SCOPE: " << result.reason << "\n";
    if (!trace_path.empty()) nzflow::io::save(trace_path, result.trace.to_string());
    return kExitOutsideScope;
  }
  if (result.status == nzflow::PipelineStatus::infeasible) {
    std::cout << "INFEASIBLE: " << result.reason << "\n";
    if (!trace_path.empty()) nzflow::io::save(trace_path, result.trace.to_string());
    return kExitInfeasible;
  }
  if (!trace_path.empty()) {
    nzflow::io::save(trace_path,
                     result.trace.to_string() + nzflow::io::to_string(*result.flow));
  }
  emit(out_path, nzflow::io::to_string(*result.flow));
  return kExitSolved;
}

int run_hypotheses(const std::string& graph_path, const std::string& group_path) {
  nzflow::Graph graph = nzflow::io::load_graph(graph_path);
  nzflow::PermGroup grp = nzflow::io::load_group(group_path);
  auto report = nzflow::check_hypotheses(graph, grp);
  std::cout << report.to_string();
  return report.all() ? kExitSolved : kExitOutsideScope;
}

int run_quotient(const std::string& graph_path, const std::string& group_path,
                 const std::string& partition_path, const std::string& out_path,
                 const std::string& cert_path) {
  nzflow::Graph graph = nzflow::io::load_graph(graph_path);
  std::optional<nzflow::VertexPartition> partition;
  if (!group_path.empty()) {
    nzflow::PermGroup grp = nzflow::io::load_group(group_path);
    if (grp.degree() != graph.vertex_count()) {
      std::cerr << "group degree does not match the graph\n";
      return kExitError;
    }
    partition = nzflow::orbits(grp);
  } else {
    partition = nzflow::io::load_partition(partition_path, graph.vertex_count());
  }

  auto quotient = nzflow::quotient_graph(graph, *partition);
  emit(out_path, nzflow::io::to_string(quotient.graph));

  auto certified = nzflow::certify_multicover(graph, *partition);
  if (!certified.ok()) {
    std::cout << "NOT-MULTICOVER: " << certified.reason << "\n";
    return kExitInfeasible;
  }
  std::cout << "MULTICOVER t=" << certified.cert->t << "\n";
  if (!cert_path.empty()) {
    std::ostringstream ss;
    nzflow::io::write_certificate(ss, *certified.cert);
    nzflow::io::save(cert_path, ss.str());
  }
  return kExitSolved;
}

int run_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& out_path, const std::string& group_out) {
  namespace fam = nzflow::families;
  std::optional<nzflow::Graph> graph;
  std::optional<nzflow::PermGroup> group;

  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("family '" + family + "' expects " + std::to_string(count) +
                                  " parameter(s)");
    }
  };

  if (family == "cycle") {
    need(1);
    graph = fam::cycle(std::stoi(params[0]));
  } else if (family == "complete") {
    need(1);
    int n = std::stoi(params[0]);
    graph = fam::complete(n);
    if (fam::is_prime(n)) group = fam::complete_affine_group(n);
  } else if (family == "complete_bipartite") {
    need(2);
    int a = std::stoi(params[0]);
    int b = std::stoi(params[1]);
    graph = fam::complete_bipartite(a, b);
    if (a == b) group = fam::complete_bipartite_group(a);
  } else if (family == "circulant") {
    need(2);
    int n = std::stoi(params[0]);
    auto chords = parse_int_list(params[1]);
    graph = fam::circulant(n, chords);
    group = fam::circulant_symmetry_group(n, chords);
  } else if (family == "cayley") {
    need(2);
    auto mods = parse_int_list(params[0]);
    std::vector<std::vector<int>> connection;
    std::stringstream ss(params[1]);
    std::string element;
    while (std::getline(ss, element, ';')) {
      if (!element.empty()) connection.push_back(parse_int_list(element));
    }
    graph = fam::cayley_abelian(mods, connection);
    group = fam::cayley_translation_group(mods, connection);
  } else if (family == "octahedron") {
    need(0);
    graph = fam::octahedron();
    group = fam::octahedron_group();
  } else if (family == "petersen") {
    need(0);
    graph = fam::petersen();
    group = fam::petersen_s5_group();
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }

  emit(out_path, nzflow::io::to_string(*graph));
  if (!group_out.empty()) {
    if (!group) {
      std::cerr << "no group is emitted for family '" << family << "' with these parameters\n";
      return kExitError;
    }
    nzflow::io::save(group_out, nzflow::io::to_string(*group));
  }
  return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nowhere-zero integer k-flows on finite graphs"};
  app.require_subcommand(1);

  long long budget = budget_from_env(50'000'000);

  // solve
  std::string graph_path, flow_path, group_path, partition_path, out_path, trace_path, cert_path;
  int k = 3;
  auto* solve = app.add_subcommand("solve", "exhaustive nowhere-zero k-flow search");
  solve->add_option("graph", graph_path, "graph file")->required();
  solve->add_option("-k,--k", k, "flow parameter k >= 2")->required();
  solve->add_option("-o,--out", out_path, "flow output file (default stdout)");
  solve->add_option("--budget", budget, "backtracking node budget");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a flow file against a graph");
  verify->add_option("graph", graph_path, "graph file")->required();
  verify->add_option("flow", flow_path, "flow file")->required();

  // pipeline
  bool fallback = false, per_component = false;
  std::vector<std::string> component_groups;
  auto* pipeline = app.add_subcommand("pipeline", "solvable arc-transitive 3-flow pipeline");
  pipeline->add_option("graph", graph_path, "graph file")->required();
  pipeline->add_option("group", group_path, "group file (first component in --per-component mode)");
  pipeline->add_flag("--fallback", fallback, "run the generic solver when hypotheses fail");
  pipeline->add_flag("--per-component", per_component, "split the graph into components");
  pipeline->add_option("--groups", component_groups, "additional group files, one per component");
  pipeline->add_option("--trace", trace_path, "write the step trace here");
  pipeline->add_option("-o,--out", out_path, "flow output file (default stdout)");
  pipeline->add_option("--budget", budget, "backtracking node budget");

  // group
  auto* group_cmd = app.add_subcommand("group", "derived series report");
  group_cmd->add_option("group", group_path, "group file")->required();

  // hypotheses (report form of the pipeline gate)
  auto* hyp = app.add_subcommand("hypotheses", "check the pipeline hypotheses");
  hyp->add_option("graph", graph_path, "graph file")->required();
  hyp->add_option("group", group_path, "group file")->required();

  // quotient
  auto* quotient = app.add_subcommand("quotient", "orbit quotient and multicover certificate");
  quotient->add_option("graph", graph_path, "graph file")->required();
  quotient->add_option("--group", group_path, "group file: quotient by its orbits");
  quotient->add_option("--partition", partition_path, "partition file");
  quotient->add_option("-o,--out", out_path, "quotient graph output (default stdout)");
  quotient->add_option("--cert", cert_path, "multicover certificate output");

  // gen
  std::string family;
  std::vector<std::string> params;
  std::string group_out;
  int seed = 0;
  auto* gen = app.add_subcommand("gen", "generate a named graph family");
  gen->add_option("family", family,
                  "cycle | complete | complete_bipartite | circulant | cayley | octahedron | petersen")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("-o,--out", out_path, "graph output file (default stdout)");
  gen->add_option("--group-out", group_out, "also write the known symmetry group");
  gen->add_option("--seed", seed, "seed for randomized corpus sampling (unused by the deterministic families)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(graph_path, k, budget, out_path);
    if (verify->parsed()) return run_verify(graph_path, flow_path);
    if (pipeline->parsed()) {
      if (!per_component && group_path.empty()) {
        std::cerr << "pipeline needs a group file\n";
        return kExitError;
      }
      return run_pipeline(graph_path, group_path, fallback, per_component, component_groups,
                          budget, out_path, trace_path);
    }
    if (group_cmd->parsed()) return run_group(group_path);
    if (hyp->parsed()) return run_hypotheses(graph_path, group_path);
    if (quotient->parsed()) {
      if (group_path.empty() == partition_path.empty()) {
        std::cerr << "quotient needs exactly one of --group / --partition\n";
        return kExitError;
      }
      return run_quotient(graph_path, group_path, partition_path, out_path, cert_path);
    }
    if (gen->parsed()) return run_gen(family, params, out_path, group_out);
  } catch (const nzflow::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
