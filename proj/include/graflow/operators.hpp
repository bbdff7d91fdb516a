#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <vector>

#include "graflow/execution.hpp"
#include "graflow/frontier.hpp"
#include "graflow/graph.hpp"

namespace graflow {

namespace detail {

inline std::vector<vertex_t> active_vertices_of(const Frontier& f) {
  if (f.repr() == FrontierRepr::sparse) return f.active_list();
  std::vector<vertex_t> out;
  out.reserve(f.size());
  for (std::size_t i = 0, n = f.size(); i < n; ++i)
    out.push_back(f.get_active_vertex(i));
  return out;
}

}  // namespace detail

/// Push traversal: for every active vertex v and every out-edge e=(v,n,w),
/// invokes cond(v, n, e, w) exactly once; n joins the output frontier for
/// each invocation returning true (duplicates possible). Returns only after
/// all invocations complete. Output representation matches the input.
/// Sequential mode processes edges in ascending (frontier-position, edge-id)
/// order. Parallel mode chunks frontier elements statically across workers
/// with per-worker output buffers merged at the barrier.
template <typename Cond>
Frontier neighbors_expand(const ExecutionPolicy& policy, const Graph& g,
                          const Frontier& f, Cond&& cond) {
  if (f.repr() == FrontierRepr::queue)
    throw std::invalid_argument(
        "neighbors_expand: queue frontier requires the asynchronous driver");
  if (policy.mode == ExecutionMode::ParallelAsync)
    throw std::invalid_argument(
        "neighbors_expand: par-nosync is exposed only via async_expand_loop");

  std::vector<vertex_t> active = detail::active_vertices_of(f);
  std::size_t workers = policy.mode == ExecutionMode::Sequential
                            ? 1
                            : std::min(policy.worker_count, std::max<std::size_t>(active.size(), 1));
  std::vector<std::vector<vertex_t>> hits(std::max<std::size_t>(workers, 1));

  detail::run_chunked(policy, active.size(),
                      [&](std::size_t w, std::size_t lo, std::size_t hi) {
                        auto& out = hits[w];
                        for (std::size_t i = lo; i < hi; ++i) {
                          vertex_t v = active[i];
                          for (auto e : g.get_edges(v)) {
                            vertex_t n = g.get_dest_vertex(e);
                            weight_t wt = g.get_edge_weight(e);
                            if (cond(v, n, e, wt)) out.push_back(n);
                          }
                        }
                      });

  Frontier out(f.repr(), g.num_vertices(), f.kind());
  for (const auto& buf : hits)
    for (vertex_t n : buf) out.add_vertex(n);
  return out;
}

/// Pull traversal: every vertex u scans its in-edges (via the CSC view);
/// for each in-edge whose source is active in the bitmap, cond is invoked
/// with the original CSR edge id. u joins the output at most once, but cond
/// runs for every eligible in-edge so monotone side effects (relaxations)
/// are never dropped. The eligible (src, dst, edge) set equals the push
/// set exactly. Output is a dense bitmap.
template <typename Cond>
Frontier neighbors_expand_pull(const ExecutionPolicy& policy, const Graph& g,
                               const Frontier& f, Cond&& cond) {
  if (!g.has_transpose())
    throw std::invalid_argument("neighbors_expand_pull: transpose not built");
  if (f.repr() != FrontierRepr::dense)
    throw std::invalid_argument("neighbors_expand_pull: dense frontier required");
  if (policy.mode == ExecutionMode::ParallelAsync)
    throw std::invalid_argument(
        "neighbors_expand_pull: par-nosync is exposed only via async_expand_loop");

  std::size_t n = g.num_vertices();
  std::vector<std::vector<vertex_t>> hits(
      policy.mode == ExecutionMode::Sequential
          ? 1
          : std::max<std::size_t>(std::min(policy.worker_count, n), 1));

  detail::run_chunked(policy, n,
                      [&](std::size_t w, std::size_t lo, std::size_t hi) {
                        auto& out = hits[w];
                        for (std::size_t u = lo; u < hi; ++u) {
                          bool activated = false;
                          for (auto i : g.in_edges(static_cast<vertex_t>(u))) {
                            vertex_t v = g.in_edge_source(i);
                            if (!f.contains(v)) continue;
                            edge_t e = g.in_edge_id(i);
                            weight_t wt = g.in_edge_weight(i);
                            if (cond(v, static_cast<vertex_t>(u), e, wt))
                              activated = true;
                          }
                          if (activated) out.push_back(static_cast<vertex_t>(u));
                        }
                      });

  Frontier out(FrontierRepr::dense, n, f.kind());
  for (const auto& buf : hits)
    for (vertex_t u : buf) out.add_vertex(u);
  return out;
}

/// Asynchronous expand: workers repeatedly pop a vertex from the queue
/// frontier, expand its out-edges, and push back every neighbor whose cond
/// holds (self-messaging). No supersteps, no barriers. Returns once the
/// queue is empty with all workers idle; cond side effects must be monotone.
template <typename Cond>
void async_expand_loop(const ExecutionPolicy& policy, const Graph& g,
                       Frontier& f, Cond&& cond) {
  if (f.repr() != FrontierRepr::queue)
    throw std::invalid_argument("async_expand_loop: queue frontier required");
  if (policy.mode != ExecutionMode::ParallelAsync)
    throw std::invalid_argument("async_expand_loop: requires par-nosync policy");
  policy.validate();

  auto worker = [&] {
    for (;;) {
      auto v = f.acquire();
      if (!v) {
        if (f.quiescent()) return;
        std::this_thread::yield();
        continue;
      }
      for (auto e : g.get_edges(*v)) {
        vertex_t n = g.get_dest_vertex(e);
        weight_t wt = g.get_edge_weight(e);
        if (cond(*v, n, e, wt)) f.add_vertex(n);
      }
      f.release();
    }
  };

  std::size_t workers = std::max<std::size_t>(policy.worker_count, 1);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      try {
        worker();
      } catch (...) {
        errors[w] = std::current_exception();
        f.release();  // do not wedge termination detection
      }
    });
  for (auto& t : threads) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

/// Keeps exactly the frontier elements satisfying pred, preserving the
/// representation; sequential mode preserves order.
template <typename Pred>
Frontier filter(const ExecutionPolicy& policy, const Frontier& f, Pred&& pred) {
  if (f.repr() == FrontierRepr::queue)
    throw std::invalid_argument("filter: queue frontier not supported");
  if (policy.mode == ExecutionMode::ParallelAsync)
    throw std::invalid_argument("filter: par-nosync not supported");

  std::vector<vertex_t> active = detail::active_vertices_of(f);
  std::size_t workers = policy.mode == ExecutionMode::Sequential
                            ? 1
                            : std::max<std::size_t>(
                                  std::min(policy.worker_count, active.size()), 1);
  std::vector<std::vector<vertex_t>> kept(workers);
  detail::run_chunked(policy, active.size(),
                      [&](std::size_t w, std::size_t lo, std::size_t hi) {
                        for (std::size_t i = lo; i < hi; ++i)
                          if (pred(active[i])) kept[w].push_back(active[i]);
                      });

  Frontier out(f.repr(), f.num_vertices(), f.kind());
  for (const auto& buf : kept)
    for (vertex_t v : buf) out.add_vertex(v);
  return out;
}

/// Sparse frontier dedup: ascending, duplicate-free list of the same set.
inline Frontier uniquify(const Frontier& f) {
  if (f.repr() != FrontierRepr::sparse)
    throw std::invalid_argument("uniquify: sparse frontier required");
  std::vector<vertex_t> v = f.active_list();
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  Frontier out(FrontierRepr::sparse, f.num_vertices(), f.kind());
  for (vertex_t x : v) out.add_vertex(x);
  return out;
}

/// Invokes body exactly once per vertex in [0, n), with a barrier on return.
/// ParallelAsync behaves identically to ParallelSync here: initialization
/// has no asynchrony to exploit.
template <typename Body>
void parallel_for_each_vertex(const ExecutionPolicy& policy, std::size_t n,
                              Body&& body) {
  ExecutionPolicy p = policy;
  if (p.mode == ExecutionMode::ParallelAsync) p.mode = ExecutionMode::ParallelSync;
  detail::run_chunked(p, n, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t v = lo; v < hi; ++v) body(static_cast<vertex_t>(v));
  });
}

}  // namespace graflow
