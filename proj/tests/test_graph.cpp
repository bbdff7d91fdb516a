#include <doctest.h>

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "graflow/graph.hpp"
#include "random_graphs.hpp"

using namespace graflow;

namespace {

Graph triangle() {
  return build_csr({{0, 1, 1.0}, {0, 2, 4.0}, {1, 2, 2.0}}, 3);
}

using EdgeKey = std::tuple<vertex_t, vertex_t, weight_t>;

std::multimap<EdgeKey, int> edge_multiset(const Graph& g) {
  std::multimap<EdgeKey, int> out;
  for (edge_t e = 0; e < g.num_edges(); ++e)
    out.insert({{g.get_source_vertex(e), g.get_dest_vertex(e),
                 g.get_edge_weight(e)},
                0});
  return out;
}

void check_csr_invariants(const Graph& g) {
  const auto& off = g.row_offsets();
  REQUIRE(off.size() == g.num_vertices() + 1);
  CHECK(off.front() == 0);
  CHECK(off.back() == g.num_edges());
  CHECK(std::is_sorted(off.begin(), off.end()));
  for (vertex_t c : g.column_indices()) CHECK(c < g.num_vertices());
  for (weight_t w : g.values()) CHECK(w >= 0);
}

}  // namespace

TEST_CASE("build_csr lays out the triangle graph deterministically") {
  Graph g = triangle();
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g.row_offsets() == std::vector<edge_t>{0, 2, 3, 3});
  CHECK(g.column_indices() == std::vector<vertex_t>{1, 2, 2});
  CHECK(g.values() == std::vector<weight_t>{1.0, 4.0, 2.0});
  check_csr_invariants(g);
}

TEST_CASE("build_csr handles the empty graph") {
  Graph g = build_csr({}, 1);
  CHECK(g.num_edges() == 0);
  CHECK(g.row_offsets() == std::vector<edge_t>{0, 0});
  check_csr_invariants(g);
}

TEST_CASE("build_csr retains self-loops") {
  Graph g = build_csr({{0, 0, 0.5}}, 1);
  CHECK(g.row_offsets() == std::vector<edge_t>{0, 1});
  CHECK(g.get_dest_vertex(0) == 0);
}

TEST_CASE("build_csr retains parallel edges") {
  Graph g = build_csr({{0, 1, 2.0}, {0, 1, 1.0}}, 2);
  CHECK(g.num_edges() == 2);
  // sorted by destination then weight within the vertex
  CHECK(g.get_edge_weight(0) == 1.0);
  CHECK(g.get_edge_weight(1) == 2.0);
}

TEST_CASE("build_csr rejects bad edges, naming the offending index") {
  CHECK_THROWS_WITH_AS(build_csr({{0, 1, 1.0}, {0, 5, 1.0}}, 3),
                       doctest::Contains("edge 1"), std::invalid_argument);
  CHECK_THROWS_AS(build_csr({{0, 1, -1.0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(
      build_csr({{0, 1, std::numeric_limits<double>::quiet_NaN()}}, 2),
      std::invalid_argument);
  CHECK_THROWS_AS(
      build_csr({{0, 1, std::numeric_limits<double>::infinity()}}, 2),
      std::invalid_argument);
}

TEST_CASE("get_edges returns half-open out-edge ranges") {
  Graph g = triangle();
  auto r0 = g.get_edges(0);
  CHECK(r0.start == 0);
  CHECK(r0.stop == 2);
  auto r1 = g.get_edges(1);
  CHECK(r1.start == 2);
  CHECK(r1.stop == 3);
  CHECK(g.get_edges(2).empty());
  CHECK_THROWS_AS(g.get_edges(3), std::out_of_range);
}

TEST_CASE("edge accessors report fields of the original CSR ordering") {
  Graph g = triangle();
  CHECK(g.get_dest_vertex(1) == 2);
  CHECK(g.get_edge_weight(1) == 4.0);
  CHECK(g.get_source_vertex(1) == 0);
  CHECK(g.get_dest_vertex(2) == 2);
  CHECK(g.get_edge_weight(2) == 2.0);
  CHECK(g.get_source_vertex(2) == 1);
  CHECK_THROWS_AS(g.get_dest_vertex(3), std::out_of_range);
  CHECK_THROWS_AS(g.get_edge_weight(99), std::out_of_range);
  CHECK_THROWS_AS(g.get_source_vertex(3), std::out_of_range);
}

TEST_CASE("edge-list reconstruction matches input after canonical sort") {
  auto edges = testutil::random_edges(60, 7);
  Graph g = build_csr(edges, 60);
  check_csr_invariants(g);

  std::vector<EdgeKey> expected;
  for (const auto& e : edges) expected.push_back({e.src, e.dst, e.weight});
  std::sort(expected.begin(), expected.end());

  std::vector<EdgeKey> actual;
  for (edge_t e = 0; e < g.num_edges(); ++e)
    actual.push_back(
        {g.get_source_vertex(e), g.get_dest_vertex(e), g.get_edge_weight(e)});
  std::sort(actual.begin(), actual.end());
  CHECK(actual == expected);

  // every edge is inside its source's range
  for (edge_t e = 0; e < g.num_edges(); ++e) {
    auto r = g.get_edges(g.get_source_vertex(e));
    CHECK(r.start <= e);
    CHECK(e < r.stop);
  }
}

TEST_CASE("build_transpose populates the CSC view") {
  Graph g = build_transpose(triangle());
  REQUIRE(g.has_transpose());
  CHECK(g.in_edges(0).empty());
  CHECK(g.in_edges(1).size() == 1);
  CHECK(g.in_edges(2).size() == 2);

  // back-mapped original edges have identical (src, dst, weight)
  for (vertex_t u = 0; u < g.num_vertices(); ++u) {
    for (auto i : g.in_edges(u)) {
      edge_t e = g.in_edge_id(i);
      CHECK(g.get_dest_vertex(e) == u);
      CHECK(g.get_source_vertex(e) == g.in_edge_source(i));
      CHECK(g.get_edge_weight(e) == g.in_edge_weight(i));
    }
  }
}

TEST_CASE("transpose of the empty graph is empty") {
  Graph g = build_transpose(build_csr({}, 1));
  CHECK(g.has_transpose());
  CHECK(g.in_edges(0).empty());
}

TEST_CASE("transposing twice recovers the original edge multiset") {
  for (std::uint64_t seed : {1, 2, 3}) {
    Graph g = testutil::random_graph(50, seed);
    Graph t = build_transpose(g);
    // rebuild a graph from the CSC view and transpose again
    std::vector<WeightedEdge> reversed;
    for (vertex_t u = 0; u < t.num_vertices(); ++u)
      for (auto i : t.in_edges(u))
        reversed.push_back({u, t.in_edge_source(i), t.in_edge_weight(i)});
    Graph tt = build_transpose(build_csr(reversed, t.num_vertices()));
    std::vector<WeightedEdge> back;
    for (vertex_t u = 0; u < tt.num_vertices(); ++u)
      for (auto i : tt.in_edges(u))
        back.push_back({u, tt.in_edge_source(i), tt.in_edge_weight(i)});
    CHECK(edge_multiset(build_csr(back, g.num_vertices())) == edge_multiset(g));
  }
}

TEST_CASE("random_partition is deterministic and roughly balanced") {
  Graph g = testutil::random_graph(1000, 11);

  Graph p1 = random_partition(g, 1, 42);
  for (vertex_t p : p1.partition()) CHECK(p == 0);

  Graph p4a = random_partition(g, 4, 42);
  Graph p4b = random_partition(g, 4, 42);
  CHECK(p4a.partition() == p4b.partition());

  std::vector<std::size_t> counts(4, 0);
  for (vertex_t p : p4a.partition()) {
    REQUIRE(p < 4);
    ++counts[p];
  }
  for (std::size_t c : counts) {
    CHECK(c >= 150);  // 15% of 1000
    CHECK(c <= 350);  // 35% of 1000
  }

  CHECK_THROWS_AS(random_partition(g, 0, 1), std::invalid_argument);
}
