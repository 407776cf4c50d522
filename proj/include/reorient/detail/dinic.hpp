#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace reorient::detail {

/// Integral max-flow (Dinic) on a small residual network. Supports early termination at a
/// flow limit, which the connectivity oracles use to stop once k paths are found.
class Dinic {
 public:
  static constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

  explicit Dinic(int num_nodes);

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }

  /// Returns the id of the forward residual arc.
  int add_edge(int from, int to, std::int64_t capacity);

  /// Adds an undirected unit-style connection usable in either direction (capacity each way).
  void add_undirected(int a, int b, std::int64_t capacity);

  std::int64_t run(int source, int sink, std::int64_t limit = kInfinity);

  /// Nodes reachable from `source` in the current residual network.
  std::vector<char> reachable_from(int source) const;

  std::int64_t flow_on(int edge_id) const { return edges_[edge_id ^ 1].capacity; }
  std::int64_t residual(int edge_id) const { return edges_[edge_id].capacity; }

  /// Restores all capacities to their initial values.
  void reset();

 private:
  struct ResidualArc {
    int to;
    std::int64_t capacity;
    std::int64_t initial;
  };

  bool build_levels(int source, int sink);
  std::int64_t push(int node, int sink, std::int64_t amount);

  std::vector<ResidualArc> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace reorient::detail
