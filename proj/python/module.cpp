// Python bindings for the graph analytics core: graph construction and
// queries, matrix market ingestion, and the SSSP/BFS entry points.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "graflow/algorithms.hpp"
#include "graflow/graph.hpp"
#include "graflow/io.hpp"

namespace py = pybind11;
using namespace graflow;

namespace {

SsspConfig make_config(const std::string& policy, const std::string& direction,
                       const std::string& frontier, std::size_t workers) {
  SsspConfig cfg;
  if (policy == "seq")
    cfg.policy = ExecutionPolicy::sequential();
  else if (policy == "par")
    cfg.policy = ExecutionPolicy::parallel(workers);
  else if (policy == "par-nosync")
    cfg.policy = ExecutionPolicy::async(workers);
  else
    throw std::invalid_argument("policy must be seq|par|par-nosync");

  if (direction == "push")
    cfg.direction = Direction::push;
  else if (direction == "pull")
    cfg.direction = Direction::pull;
  else
    throw std::invalid_argument("direction must be push|pull");

  if (frontier == "sparse")
    cfg.frontier_repr = FrontierRepr::sparse;
  else if (frontier == "dense")
    cfg.frontier_repr = FrontierRepr::dense;
  else if (frontier == "queue")
    cfg.frontier_repr = FrontierRepr::queue;
  else
    throw std::invalid_argument("frontier must be sparse|dense|queue");
  return cfg;
}

std::vector<std::optional<vertex_t>> pred_to_py(const PredecessorMap& pred) {
  std::vector<std::optional<vertex_t>> out;
  out.reserve(pred.size());
  for (vertex_t p : pred)
    out.push_back(p == no_predecessor ? std::nullopt
                                      : std::optional<vertex_t>(p));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parallel native-graph analytics: CSR/CSC graphs, frontiers, "
            "and frontier-based SSSP/BFS";

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("get_edges",
           [](const Graph& g, vertex_t v) {
             auto r = g.get_edges(v);
             return py::make_tuple(r.start, r.stop);
           },
           py::arg("v"), "Half-open [start, stop) range of out-edge ids")
      .def("get_dest_vertex", &Graph::get_dest_vertex, py::arg("e"))
      .def("get_source_vertex", &Graph::get_source_vertex, py::arg("e"))
      .def("get_edge_weight", &Graph::get_edge_weight, py::arg("e"))
      .def_property_readonly("has_transpose", &Graph::has_transpose)
      .def_property_readonly("row_offsets", &Graph::row_offsets)
      .def_property_readonly("column_indices", &Graph::column_indices)
      .def_property_readonly("values", &Graph::values)
      .def_property_readonly("partition", &Graph::partition);

  m.def(
      "build_csr",
      [](const std::vector<std::tuple<vertex_t, vertex_t, weight_t>>& edges,
         std::size_t num_vertices) {
        std::vector<WeightedEdge> wedges;
        wedges.reserve(edges.size());
        for (const auto& [s, d, w] : edges) wedges.push_back({s, d, w});
        return build_csr(wedges, num_vertices);
      },
      py::arg("edges"), py::arg("num_vertices"),
      "Build an immutable CSR graph from (src, dst, weight) triples");

  m.def("build_transpose", &build_transpose, py::arg("graph"));
  m.def("random_partition", &random_partition, py::arg("graph"), py::arg("k"),
        py::arg("seed"));

  m.def(
      "load_matrix_market",
      [](const std::string& path, bool force_unit_weights,
         bool expand_symmetric) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        MatrixMarketOptions opt;
        opt.force_unit_weights = force_unit_weights;
        opt.expand_symmetric = expand_symmetric;
        auto el = parse_matrix_market(in, opt);
        return build_csr(el.edges, el.num_vertices);
      },
      py::arg("path"), py::arg("force_unit_weights") = false,
      py::arg("expand_symmetric") = false,
      "Parse a Matrix Market coordinate file and build the CSR graph");

  m.def(
      "sssp",
      [](const Graph& g, vertex_t source, const std::string& policy,
         const std::string& direction, const std::string& frontier,
         std::size_t workers) {
        auto r = sssp(g, source, make_config(policy, direction, frontier, workers));
        return py::make_tuple(r.dist, pred_to_py(r.pred), r.supersteps,
                              r.relaxations);
      },
      py::arg("graph"), py::arg("source"), py::arg("policy") = "par",
      py::arg("direction") = "push", py::arg("frontier") = "sparse",
      py::arg("workers") = ExecutionPolicy::default_workers(),
      "Returns (distances, predecessors, supersteps, relaxations); "
      "unreachable vertices get math.inf and predecessor None");

  m.def(
      "bfs",
      [](const Graph& g, vertex_t source, const std::string& policy,
         const std::string& direction, const std::string& frontier,
         std::size_t workers) {
        auto r = bfs(g, source, make_config(policy, direction, frontier, workers));
        return py::make_tuple(r.depth, r.supersteps, r.relaxations);
      },
      py::arg("graph"), py::arg("source"), py::arg("policy") = "par",
      py::arg("direction") = "push", py::arg("frontier") = "sparse",
      py::arg("workers") = ExecutionPolicy::default_workers(),
      "Returns (depths, supersteps, relaxations)");

  m.def(
      "reference_dijkstra",
      [](const Graph& g, vertex_t source) {
        auto [dist, pred] = reference_dijkstra(g, source);
        return py::make_tuple(dist, pred_to_py(pred));
      },
      py::arg("graph"), py::arg("source"),
      "Sequential binary-heap Dijkstra, the validation oracle");
}
