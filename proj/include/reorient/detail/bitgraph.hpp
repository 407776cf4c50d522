#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "reorient/graph.hpp"

namespace reorient::detail {

/// Adjacency bitmasks of a mixed graph on at most 64 vertices. Edges act as digons.
/// Parallel elements collapse, which is exact for every vertex-connectivity question.
class BitGraph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit BitGraph(const MixedGraph& m);
  BitGraph(int n, std::vector<std::uint64_t> out, std::vector<std::uint64_t> in);

  int size() const { return n_; }
  std::uint64_t all() const { return n_ == 64 ? ~0ULL : ((1ULL << n_) - 1); }
  std::uint64_t out(int v) const { return out_[v]; }
  std::uint64_t in(int v) const { return in_[v]; }

  void add(int from, int to) {
    out_[from] |= 1ULL << to;
    in_[to] |= 1ULL << from;
  }

  std::uint64_t forward(int root, std::uint64_t alive) const { return closure(out_, root, alive); }
  std::uint64_t backward(int root, std::uint64_t alive) const { return closure(in_, root, alive); }

  /// Strong connectivity of the subgraph induced by `alive` (true when it has < 2 vertices).
  bool strong(std::uint64_t alive) const {
    if (std::popcount(alive) < 2) return true;
    const int root = std::countr_zero(alive);
    return forward(root, alive) == alive && backward(root, alive) == alive;
  }

  /// k-strong by enumerating deletion sets of size < k.
  bool k_strong(int k) const;

  /// Visits every vertex set X with |X| < k (as a mask); stops early when `fn` returns false.
  template <class Fn>
  bool for_each_small_set(int k, Fn&& fn) const {
    std::uint64_t set = 0;
    return small_sets(0, k - 1, set, fn);
  }

 private:
  static std::uint64_t closure(const std::vector<std::uint64_t>& adj, int root, std::uint64_t alive) {
    std::uint64_t reach = 1ULL << root;
    std::uint64_t frontier = reach;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint64_t next = adj[v] & alive & ~reach;
      reach |= next;
      frontier |= next;
    }
    return reach;
  }

  template <class Fn>
  bool small_sets(int start, int remaining, std::uint64_t& set, Fn& fn) const {
    if (!fn(set)) return false;
    if (remaining == 0) return true;
    for (int v = start; v < n_; ++v) {
      set |= 1ULL << v;
      const bool keep_going = small_sets(v + 1, remaining - 1, set, fn);
      set &= ~(1ULL << v);
      if (!keep_going) return false;
    }
    return true;
  }

  int n_;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

}  // namespace reorient::detail
