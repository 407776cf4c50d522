#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "reorient/connectivity.hpp"
#include "reorient/exact.hpp"
#include "reorient/graph.hpp"
#include "reorient/rational.hpp"

namespace reorient {

struct RobbinsResult {
  bool feasible = false;
  int bound = 0;  ///< |E| - b(G), or 0 for a disconnected graph
  PartialOrientation orientation;
};

/// Strong partial orientation of a connected graph with exactly k oriented edges.
RobbinsResult robbins_partial_orientation(const MixedGraph& g, int k);

/// Quotient of a 2-edge-connected graph by the relation lambda(u, v) >= 3.
struct CactusQuotient {
  MixedGraph quotient;
  std::vector<int> class_of;     ///< source vertex -> quotient vertex
  std::vector<int> edge_origin;  ///< quotient edge -> source edge
};

CactusQuotient cactus_quotient(const MixedGraph& g);

/// Every pair of distinct vertices has local edge connectivity exactly 2.
bool is_cactus(const MixedGraph& g);

/// Minimum-weight doubling to 3-edge-connectivity through the cactus quotient and a
/// minimum spanning tree (ties by weight, then source edge index). Unit weights if empty.
SolveResult w23eda(const MixedGraph& g, const std::vector<Rational>& weights = {});

/// Minimum number of arcs to deorient so that every vertex has d+ + d >= k and d- + d >= k,
/// read off a minimum-cost feasible flow.
SolveResult degree_deorientation(const MixedGraph& d, int k);

enum class BranchingDirection { out, in };

struct BranchingPacking {
  VertexId root = 0;
  BranchingDirection direction = BranchingDirection::out;
  std::vector<std::vector<int>> branchings;  ///< arc indices, one list per branching
};

struct PackingResult {
  bool feasible = false;
  BranchingPacking packing;
  Rational weight = 0;
  /// Root-free set X with d-(X) < k for out-branchings, d+(X) < k for in-branchings.
  std::optional<CutSet> violated_cut;
};

/// k arc-disjoint spanning branchings rooted at `root` of minimum total weight, via weighted
/// matroid intersection (k-fold graphic matroid against in-degree capacities).
PackingResult min_weight_branching_packing(const MixedGraph& d, int k, VertexId root,
                                           const std::vector<Rational>& weights, BranchingDirection direction);

struct DeorientationApprox {
  bool feasible = false;
  std::vector<int> arcs;  ///< arcs to deorient
  PackingResult out_packing;
  PackingResult in_packing;
};

/// Deorientation set making D k-arc-strong, at most twice the optimum.
DeorientationApprox deor_k_arc_2approx(const MixedGraph& d, int k, VertexId root = 0);

/// Inner solver for restricted 3-to-4 augmentation: given a 3-edge-connected graph and the
/// indices of its edges that may be doubled, return the indices to double.
using AugmentationPlug = std::function<std::vector<int>(const MixedGraph&, const std::vector<int>&)>;

/// The default plug: exact minimum via min_doubling with the other edges forbidden.
std::vector<int> exact_augmentation_plug(const MixedGraph& g, const std::vector<int>& candidates);

struct DoublingApprox {
  bool feasible = false;
  std::vector<int> doubled;  ///< F = F1 + F2, sorted
  std::vector<int> forced;   ///< F1, edges lying in a 2-edge-cut
  std::vector<int> chosen;   ///< F2, returned by the plug
};

DoublingApprox m4eda_approx(const MixedGraph& g, const AugmentationPlug& inner = exact_augmentation_plug);

}  // namespace reorient
