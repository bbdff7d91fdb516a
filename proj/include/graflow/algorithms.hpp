#pragma once

#include <atomic>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graflow/frontier.hpp"
#include "graflow/graph.hpp"
#include "graflow/operators.hpp"
#include "graflow/types.hpp"

namespace graflow {

using DistanceMap = std::vector<weight_t>;
using PredecessorMap = std::vector<vertex_t>;

/// Atomically sets slot to min(slot, value) and returns the PRIOR value.
/// Linearizable; lock-free CAS loop over the raw cell.
inline weight_t atomic_min(weight_t& slot, weight_t value) {
  std::atomic_ref<weight_t> cell(slot);
  weight_t current = cell.load(std::memory_order_relaxed);
  while (value < current) {
    if (cell.compare_exchange_weak(current, value, std::memory_order_relaxed))
      return current;
  }
  return current;
}

enum class Direction { push, pull };

inline const char* to_string(Direction d) {
  return d == Direction::push ? "push" : "pull";
}

struct SsspConfig {
  ExecutionPolicy policy = ExecutionPolicy::parallel();
  Direction direction = Direction::push;
  FrontierRepr frontier_repr = FrontierRepr::sparse;
  bool uniquify_frontier = false;

  void validate() const {
    policy.validate();
    bool async = policy.mode == ExecutionMode::ParallelAsync;
    bool queue = frontier_repr == FrontierRepr::queue;
    if (queue != async)
      throw std::invalid_argument(
          "config: queue frontier and par-nosync policy imply each other");
    if (queue && direction != Direction::push)
      throw std::invalid_argument("config: queue frontier requires push direction");
  }
};

struct SsspResult {
  DistanceMap dist;
  PredecessorMap pred;
  std::size_t supersteps = 0;
  std::size_t relaxations = 0;
};

struct BfsResult {
  DistanceMap depth;
  std::size_t supersteps = 0;
  std::size_t relaxations = 0;
};

namespace detail {

/// Deterministic predecessor reconstruction: breadth-first pass from the
/// source over tight edges (dist[u] + w == dist[v]), first assignment wins.
/// The fixpoint guarantees a tight-edge path to every reachable vertex, and
/// the traversal order makes pred[] acyclic and run-independent. A plain
/// per-vertex argmin over tight in-edges is not enough: zero-weight tight
/// edges between equal-distance vertices can close a cycle.
inline void repair_predecessors(const Graph& g, vertex_t source,
                                const DistanceMap& dist, PredecessorMap& pred) {
  std::fill(pred.begin(), pred.end(), no_predecessor);
  std::vector<bool> reached(g.num_vertices(), false);
  reached[source] = true;
  std::vector<vertex_t> queue{source};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    vertex_t u = queue[head];
    for (auto e : g.get_edges(u)) {
      vertex_t v = g.get_dest_vertex(e);
      if (reached[v] || dist[u] + g.get_edge_weight(e) != dist[v]) continue;
      reached[v] = true;
      pred[v] = u;
      queue.push_back(v);
    }
  }
}

}  // namespace detail

/// Textbook Dijkstra with a binary heap and lazy deletion; the independent
/// oracle the parallel configurations are validated against. Tie-break:
/// among equal-distance relaxations the first-processed predecessor wins
/// (relaxation is strict).
inline std::pair<DistanceMap, PredecessorMap> reference_dijkstra(
    const Graph& g, vertex_t source) {
  std::size_t n = g.num_vertices();
  if (source >= n) throw std::out_of_range("reference_dijkstra: source out of range");

  DistanceMap dist(n, unreachable);
  PredecessorMap pred(n, no_predecessor);
  dist[source] = 0;

  using Entry = std::pair<weight_t, vertex_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;  // stale entry
    for (auto e : g.get_edges(u)) {
      vertex_t v = g.get_dest_vertex(e);
      weight_t nd = d + g.get_edge_weight(e);
      if (nd < dist[v]) {
        dist[v] = nd;
        pred[v] = u;
        heap.push({nd, v});
      }
    }
  }
  return {std::move(dist), std::move(pred)};
}

/// Single-source shortest paths composed from the expand operators in an
/// iterative convergence loop (queue configurations delegate the whole loop
/// to async_expand_loop). Distances are exact; predecessors are rebuilt
/// deterministically after convergence.
inline SsspResult sssp(const Graph& g, vertex_t source, const SsspConfig& cfg) {
  cfg.validate();
  std::size_t n = g.num_vertices();
  if (source >= n) throw std::out_of_range("sssp: source out of range");
  if (cfg.direction == Direction::pull && !g.has_transpose())
    throw std::invalid_argument("sssp: pull direction requires a built transpose");

  SsspResult r;
  r.dist.resize(n);
  r.pred.resize(n);
  parallel_for_each_vertex(cfg.policy, n, [&](vertex_t v) {
    r.dist[v] = unreachable;
    r.pred[v] = no_predecessor;
  });
  r.dist[source] = 0;

  std::atomic<std::size_t> relaxations{0};
  auto relax = [&](vertex_t src, vertex_t dst, edge_t, weight_t w) {
    relaxations.fetch_add(1, std::memory_order_relaxed);
    weight_t src_d = std::atomic_ref<weight_t>(r.dist[src])
                         .load(std::memory_order_relaxed);
    weight_t new_d = src_d + w;
    weight_t curr_d = atomic_min(r.dist[dst], new_d);
    return new_d < curr_d;
  };

  if (cfg.frontier_repr == FrontierRepr::queue) {
    Frontier f(FrontierRepr::queue, n);
    f.add_vertex(source);
    async_expand_loop(cfg.policy, g, f, relax);
  } else {
    Frontier f(cfg.frontier_repr, n);
    f.add_vertex(source);
    while (f.size() != 0) {
      ++r.supersteps;
      if (cfg.direction == Direction::push) {
        f = neighbors_expand(cfg.policy, g, f, relax);
      } else {
        Frontier in = f.repr() == FrontierRepr::dense
                          ? std::move(f)
                          : f.convert(FrontierRepr::dense, n);
        Frontier out = neighbors_expand_pull(cfg.policy, g, in, relax);
        f = cfg.frontier_repr == FrontierRepr::dense
                ? std::move(out)
                : out.convert(cfg.frontier_repr, n);
      }
      if (cfg.uniquify_frontier && f.repr() == FrontierRepr::sparse)
        f = uniquify(f);
    }
  }

  r.relaxations = relaxations.load();
  detail::repair_predecessors(g, source, r.dist, r.pred);
  return r;
}

/// Breadth-first search as operator reuse: the expand condition claims an
/// unvisited destination with a compare-exchange from the sentinel to
/// level+1, so each vertex has exactly one claimant. Level semantics need
/// supersteps, so queue/par-nosync configurations are rejected.
inline BfsResult bfs(const Graph& g, vertex_t source, const SsspConfig& cfg) {
  cfg.validate();
  if (cfg.frontier_repr == FrontierRepr::queue)
    throw std::invalid_argument("bfs: queue configuration not supported "
                                "(level semantics require supersteps)");
  std::size_t n = g.num_vertices();
  if (source >= n) throw std::out_of_range("bfs: source out of range");
  if (cfg.direction == Direction::pull && !g.has_transpose())
    throw std::invalid_argument("bfs: pull direction requires a built transpose");

  BfsResult r;
  r.depth.resize(n);
  parallel_for_each_vertex(cfg.policy, n,
                           [&](vertex_t v) { r.depth[v] = unreachable; });
  r.depth[source] = 0;

  std::atomic<std::size_t> relaxations{0};
  weight_t level = 0;
  auto claim = [&](vertex_t, vertex_t dst, edge_t, weight_t) {
    relaxations.fetch_add(1, std::memory_order_relaxed);
    weight_t expected = unreachable;
    return std::atomic_ref<weight_t>(r.depth[dst])
        .compare_exchange_strong(expected, level + 1,
                                 std::memory_order_relaxed);
  };

  Frontier f(cfg.frontier_repr, n);
  f.add_vertex(source);
  while (f.size() != 0) {
    ++r.supersteps;
    if (cfg.direction == Direction::push) {
      f = neighbors_expand(cfg.policy, g, f, claim);
    } else {
      Frontier in = f.repr() == FrontierRepr::dense
                        ? std::move(f)
                        : f.convert(FrontierRepr::dense, n);
      Frontier out = neighbors_expand_pull(cfg.policy, g, in, claim);
      f = cfg.frontier_repr == FrontierRepr::dense
              ? std::move(out)
              : out.convert(cfg.frontier_repr, n);
    }
    level += 1;
  }
  r.relaxations = relaxations.load();
  return r;
}

}  // namespace graflow
