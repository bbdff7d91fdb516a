#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graflow/types.hpp"

namespace graflow {

enum class FrontierRepr { sparse, dense, queue };
enum class FrontierKind { vertex, edge };

inline const char* to_string(FrontierRepr r) {
  switch (r) {
    case FrontierRepr::sparse: return "sparse";
    case FrontierRepr::dense: return "dense";
    case FrontierRepr::queue: return "queue";
  }
  return "?";
}

/// Active vertex set with three interchangeable underlying representations:
///   sparse  — growable list of vertex ids, duplicates permitted;
///   dense   — bitmap over [0, num_vertices) with cached population count;
///   queue   — multi-producer multi-consumer queue with an in-flight counter,
///             the message-passing substrate for asynchronous execution.
/// Sparse and dense frontiers are single-writer; the queue is fully
/// thread-safe.
class Frontier {
 public:
  Frontier(FrontierRepr repr, std::size_t num_vertices,
           FrontierKind kind = FrontierKind::vertex)
      : repr_(repr), kind_(kind), num_vertices_(num_vertices) {
    if (repr_ == FrontierRepr::dense)
      bits_.assign((num_vertices + 63) / 64, 0);
    else if (repr_ == FrontierRepr::queue)
      queue_ = std::make_unique<QueueState>();
  }

  Frontier(Frontier&&) noexcept = default;
  Frontier& operator=(Frontier&&) noexcept = default;

  FrontierRepr repr() const { return repr_; }
  FrontierKind kind() const { return kind_; }
  std::size_t num_vertices() const { return num_vertices_; }

  /// Sparse: element count, duplicates counted. Dense: set-bit count.
  /// Queue: in-flight counter snapshot (exact only when quiescent).
  std::size_t size() const {
    switch (repr_) {
      case FrontierRepr::sparse: return list_.size();
      case FrontierRepr::dense: return count_;
      case FrontierRepr::queue: {
        std::lock_guard lock(queue_->m);
        return queue_->in_flight;
      }
    }
    return 0;
  }

  bool empty() const { return size() == 0; }

  /// Queue representation: safe from any thread (the "send message"
  /// primitive). Sparse keeps duplicates, dense is set-semantic.
  void add_vertex(vertex_t v) {
    if (v >= num_vertices_)
      throw std::out_of_range("add_vertex: vertex " + std::to_string(v) +
                              " out of range");
    switch (repr_) {
      case FrontierRepr::sparse:
        list_.push_back(v);
        break;
      case FrontierRepr::dense: {
        std::uint64_t mask = std::uint64_t{1} << (v % 64);
        if (!(bits_[v / 64] & mask)) {
          bits_[v / 64] |= mask;
          ++count_;
        }
        break;
      }
      case FrontierRepr::queue: {
        std::lock_guard lock(queue_->m);
        queue_->items.push_back(v);
        ++queue_->in_flight;
        break;
      }
    }
  }

  /// Sparse: i-th element in insertion order. Dense: i-th set bit in
  /// ascending order. Not defined for the queue representation.
  vertex_t get_active_vertex(std::size_t i) const {
    if (repr_ == FrontierRepr::queue)
      throw std::logic_error("get_active_vertex: not defined for queue frontier");
    if (i >= size())
      throw std::out_of_range("get_active_vertex: index out of range");
    if (repr_ == FrontierRepr::sparse) return list_[i];
    std::size_t seen = 0;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::size_t pop = static_cast<std::size_t>(std::popcount(bits_[w]));
      if (seen + pop <= i) {
        seen += pop;
        continue;
      }
      std::uint64_t word = bits_[w];
      while (true) {
        int b = std::countr_zero(word);
        if (seen == i) return static_cast<vertex_t>(w * 64 + b);
        word &= word - 1;
        ++seen;
      }
    }
    throw std::logic_error("get_active_vertex: bitmap count inconsistent");
  }

  /// Dense membership test.
  bool contains(vertex_t v) const {
    if (repr_ != FrontierRepr::dense)
      throw std::logic_error("contains: dense frontier required");
    return bits_[v / 64] & (std::uint64_t{1} << (v % 64));
  }

  /// Queue representation: removes and returns one vertex, or nullopt when
  /// the queue is currently empty (which does not imply termination).
  std::optional<vertex_t> pop() {
    if (repr_ != FrontierRepr::queue)
      throw std::logic_error("pop: not defined for non-queue frontier");
    std::lock_guard lock(queue_->m);
    if (queue_->items.empty()) return std::nullopt;
    vertex_t v = queue_->items.front();
    queue_->items.pop_front();
    --queue_->in_flight;
    return v;
  }

  /// New frontier in the target representation holding the same vertex SET
  /// (sparse duplicates collapse; bitmap converts to ascending order).
  /// Caller must ensure f is quiescent.
  Frontier convert(FrontierRepr target, std::size_t num_vertices) const {
    Frontier bitmap(FrontierRepr::dense, num_vertices);
    if (repr_ == FrontierRepr::sparse) {
      for (vertex_t v : list_) bitmap.add_vertex(v);
    } else if (repr_ == FrontierRepr::dense) {
      bitmap.bits_ = bits_;
      bitmap.bits_.resize((num_vertices + 63) / 64, 0);
      bitmap.count_ = count_;
    } else {
      std::lock_guard lock(queue_->m);
      for (vertex_t v : queue_->items) bitmap.add_vertex(v);
    }
    if (target == FrontierRepr::dense) return bitmap;
    Frontier out(target, num_vertices, kind_);
    std::size_t n = bitmap.size();
    for (std::size_t i = 0; i < n; ++i)
      out.add_vertex(bitmap.get_active_vertex(i));
    return out;
  }

  const std::vector<vertex_t>& active_list() const {
    if (repr_ != FrontierRepr::sparse)
      throw std::logic_error("active_list: sparse frontier required");
    return list_;
  }

  // --- queue worker protocol (used by the asynchronous expand driver) ---
  //
  // A worker acquires a vertex and is counted busy until it releases; the
  // queue is terminated once it is empty with no busy workers. All three
  // operations share the queue lock, so the quiescence check cannot race
  // with a concurrent acquire.

  std::optional<vertex_t> acquire() {
    if (repr_ != FrontierRepr::queue)
      throw std::logic_error("acquire: queue frontier required");
    std::lock_guard lock(queue_->m);
    if (queue_->items.empty()) return std::nullopt;
    vertex_t v = queue_->items.front();
    queue_->items.pop_front();
    --queue_->in_flight;
    ++queue_->busy_workers;
    return v;
  }

  void release() {
    std::lock_guard lock(queue_->m);
    --queue_->busy_workers;
  }

  bool quiescent() const {
    std::lock_guard lock(queue_->m);
    return queue_->items.empty() && queue_->busy_workers == 0;
  }

 private:
  struct QueueState {
    mutable std::mutex m;
    std::deque<vertex_t> items;
    std::size_t in_flight = 0;
    std::size_t busy_workers = 0;
  };

  FrontierRepr repr_;
  FrontierKind kind_;
  std::size_t num_vertices_;

  std::vector<vertex_t> list_;              // sparse
  std::vector<std::uint64_t> bits_;         // dense
  std::size_t count_ = 0;                   // dense population count
  std::unique_ptr<QueueState> queue_;       // queue
};

}  // namespace graflow
