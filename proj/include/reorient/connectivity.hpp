#pragma once

#include <span>
#include <vector>

#include "reorient/graph.hpp"

namespace reorient {

/// Cut query result for a vertex set X (the `side`). `d` counts edges with one end in X,
/// `d_plus`/`d_minus` count arcs leaving/entering X.
struct CutSet {
  std::vector<VertexId> side;
  int d = 0;
  int d_plus = 0;
  int d_minus = 0;
  std::vector<int> crossing_edges;
  std::vector<int> leaving_arcs;
  std::vector<int> entering_arcs;

  /// d+ + d, the capacity of the cut for mixed-graph arc connectivity out of X.
  int out_value() const { return d_plus + d; }
  int in_value() const { return d_minus + d; }
};

CutSet cut_of(const MixedGraph& m, std::span<const VertexId> side);

/// lambda_M(x, y): maximum number of element-disjoint x->y paths, edges usable in one direction.
int local_arc_connectivity(const MixedGraph& m, VertexId x, VertexId y);

/// lambda_G(x, y) for an undirected graph.
int local_edge_connectivity(const MixedGraph& g, VertexId x, VertexId y);

/// A minimum cut X with x in X, y not in X (Menger dual of local_arc_connectivity).
CutSet min_cut_between(const MixedGraph& m, VertexId x, VertexId y);

/// Maximum number of internally vertex-disjoint x->y paths; a direct connection counts once.
int local_vertex_connectivity(const MixedGraph& m, VertexId x, VertexId y);

bool is_strong(const MixedGraph& m);

/// d+_A(X) + d_E(X) >= k for every non-empty proper X.
bool is_k_arc_strong(const MixedGraph& m, int k);

/// More than k vertices and every deletion of fewer than k vertices leaves a strong graph.
/// Decided with vertex-split max-flows over non-adjacent ordered pairs.
bool is_k_strong(const MixedGraph& m, int k);

/// k internally disjoint paths between every ordered pair of distinct vertices of S.
bool is_k_strong_in(const MixedGraph& m, std::span<const VertexId> s, int k);

/// Edges (and arcs, read as edges) whose removal disconnects the underlying graph.
/// Indices refer to edges; arcs are reported as num_edges() + arc index.
std::vector<int> bridges(const MixedGraph& g);

/// Global edge connectivity of the underlying graph; INT_MAX for fewer than two vertices.
int edge_connectivity(const MixedGraph& g);

bool is_k_edge_connected(const MixedGraph& g, int k);

/// Every bipartition {X, V-X} of an undirected graph with d(X) <= c, one representative per
/// complement pair (the side containing vertex 0). Sorted by (d, side).
/// Uses vertex-subset enumeration for n <= 20 and edge-subset enumeration otherwise;
/// throws SizeError when neither is affordable.
std::vector<CutSet> enumerate_cuts_up_to(const MixedGraph& g, int c);

/// Necessary condition for a k-strong orientation: G - X is 2(k - |X|)-edge-connected for
/// every X with |X| < k. For k = 2 it characterises graphs with a 2-strong orientation.
bool check_kstrong_orientation_condition(const MixedGraph& g, int k);

namespace detail {
std::vector<CutSet> enumerate_cuts_by_vertex_subsets(const MixedGraph& g, int c);
std::vector<CutSet> enumerate_cuts_by_edge_subsets(const MixedGraph& g, int c);
/// Deletion-set enumeration with bitsets (n <= 64); cross-check for is_k_strong.
bool is_k_strong_by_deletions(const MixedGraph& m, int k);
}  // namespace detail

}  // namespace reorient
