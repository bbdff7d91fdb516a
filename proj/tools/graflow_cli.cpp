// Command-line front end: load a Matrix Market graph, run SSSP or BFS under
// a chosen configuration, optionally validate against the sequential
// Dijkstra oracle, and report results plus timing.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "graflow/algorithms.hpp"
#include "graflow/graph.hpp"
#include "graflow/io.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel native-graph analytics: SSSP/BFS over Matrix Market graphs"};

  std::string graph_path;
  std::string algorithm = "sssp";
  std::uint32_t source = 0;
  std::string policy = "par";
  std::string direction = "push";
  std::string frontier = "sparse";
  std::size_t workers = graflow::ExecutionPolicy::default_workers();
  std::string output_path;
  bool validate = false;
  std::uint64_t seed = 0;
  bool undirected = false;
  std::string stats_path;

  app.add_option("--graph", graph_path, "Input graph (.mtx)")->required();
  app.add_option("--algorithm", algorithm, "sssp|bfs")
      ->check(CLI::IsMember({"sssp", "bfs"}));
  app.add_option("--source", source, "Source vertex id");
  app.add_option("--policy", policy, "seq|par|par-nosync")
      ->check(CLI::IsMember({"seq", "par", "par-nosync"}));
  app.add_option("--direction", direction, "push|pull")
      ->check(CLI::IsMember({"push", "pull"}));
  app.add_option("--frontier", frontier, "sparse|dense|queue")
      ->check(CLI::IsMember({"sparse", "dense", "queue"}));
  app.add_option("--workers", workers, "Worker thread count");
  app.add_option("--output", output_path, "Distance table destination (default stdout)");
  app.add_flag("--validate", validate, "Compare distances against the sequential oracle");
  app.add_option("--seed", seed, "Seed for partition/test reproducibility");
  app.add_flag("--undirected", undirected, "Expand symmetric entries into both directions");
  app.add_option("--stats-json", stats_path, "Write the run report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage/message
    return 2;
  }

  graflow::SsspConfig cfg;
  if (policy == "seq")
    cfg.policy = graflow::ExecutionPolicy::sequential();
  else if (policy == "par")
    cfg.policy = graflow::ExecutionPolicy::parallel(workers);
  else
    cfg.policy = graflow::ExecutionPolicy::async(workers);
  cfg.direction = direction == "push" ? graflow::Direction::push
                                      : graflow::Direction::pull;
  cfg.frontier_repr = frontier == "sparse"  ? graflow::FrontierRepr::sparse
                      : frontier == "dense" ? graflow::FrontierRepr::dense
                                            : graflow::FrontierRepr::queue;
  try {
    cfg.validate();
    if (algorithm == "bfs" && cfg.frontier_repr == graflow::FrontierRepr::queue)
      throw std::invalid_argument(
          "config: bfs does not support the queue configuration");
  } catch (const std::exception& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  }

  nlohmann::json stats;
  stats["config"] = {{"graph", graph_path},   {"algorithm", algorithm},
                     {"source", source},      {"policy", policy},
                     {"direction", direction},{"frontier", frontier},
                     {"workers", workers},    {"seed", seed},
                     {"undirected", undirected}};

  // Load.
  graflow::EdgeList edge_list;
  auto t0 = Clock::now();
  try {
    std::ifstream in(graph_path);
    if (!in) {
      std::cerr << "cannot open graph file: " << graph_path << "\n";
      return 2;
    }
    graflow::MatrixMarketOptions opt;
    opt.expand_symmetric = undirected;
    if (algorithm == "bfs") opt.force_unit_weights = false;
    edge_list = graflow::parse_matrix_market(in, opt);
  } catch (const std::exception& e) {
    std::cerr << "parse error in " << graph_path << ": " << e.what() << "\n";
    return 2;
  }
  stats["load_ms"] = ms_since(t0);

  if (source >= edge_list.num_vertices) {
    std::cerr << "source vertex " << source << " out of range (graph has "
              << edge_list.num_vertices << " vertices)\n";
    return 2;
  }

  // Build.
  t0 = Clock::now();
  graflow::Graph g;
  try {
    g = graflow::build_csr(edge_list.edges, edge_list.num_vertices);
    if (cfg.direction == graflow::Direction::pull) g = graflow::build_transpose(g);
  } catch (const std::exception& e) {
    std::cerr << "graph construction failed: " << e.what() << "\n";
    return 2;
  }
  stats["build_ms"] = ms_since(t0);

  // Run.
  t0 = Clock::now();
  graflow::DistanceMap dist;
  graflow::PredecessorMap pred;
  if (algorithm == "sssp") {
    auto r = graflow::sssp(g, source, cfg);
    dist = std::move(r.dist);
    pred = std::move(r.pred);
    stats["supersteps"] = r.supersteps;
    stats["relaxations"] = r.relaxations;
  } else {
    auto r = graflow::bfs(g, source, cfg);
    dist = std::move(r.depth);
    pred.assign(dist.size(), graflow::no_predecessor);
    stats["supersteps"] = r.supersteps;
    stats["relaxations"] = r.relaxations;
  }
  stats["algo_ms"] = ms_since(t0);

  // Validate against the sequential oracle.
  std::string verdict = "skipped";
  if (validate) {
    graflow::Graph oracle_graph = g;
    if (algorithm == "bfs") {
      auto unit_edges = edge_list.edges;
      for (auto& e : unit_edges) e.weight = 1.0;
      oracle_graph = graflow::build_csr(unit_edges, edge_list.num_vertices);
    }
    auto [odist, opred] = graflow::reference_dijkstra(oracle_graph, source);
    verdict = "pass";
    for (std::size_t v = 0; v < dist.size(); ++v) {
      if (dist[v] != odist[v]) {
        verdict = "fail(distance mismatch at vertex " + std::to_string(v) + ")";
        break;
      }
    }
  }
  stats["verdict"] = verdict;

  try {
    if (output_path.empty()) {
      graflow::write_distances(dist, pred, std::cout);
    } else {
      std::ofstream out(output_path);
      if (!out) {
        std::cerr << "cannot open output file: " << output_path << "\n";
        return 2;
      }
      graflow::write_distances(dist, pred, out);
    }
    if (!stats_path.empty()) {
      std::ofstream out(stats_path);
      if (!out) {
        std::cerr << "cannot open stats file: " << stats_path << "\n";
        return 2;
      }
      out << stats.dump(2) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "write failure: " << e.what() << "\n";
    return 2;
  }

  if (validate && verdict != "pass") {
    std::cerr << "validation " << verdict << "\n";
    return 1;
  }
  return 0;
}
