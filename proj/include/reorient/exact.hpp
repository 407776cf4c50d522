#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reorient/graph.hpp"
#include "reorient/rational.hpp"
#include "reorient/sat.hpp"

namespace reorient {

/// Outcome of an exact solver. The witness encoding depends on the solver:
/// element indices for reversal/deorientation/doubling sets, vertex ids for covers,
/// 0/1 values per variable for assignments, EdgeChoice codes per edge for orientations.
struct SolveResult {
  bool feasible = false;
  Rational optimum = 0;
  std::vector<int> witness;
  std::int64_t nodes_explored = 0;
};

/// Connectivity requirement r(x, y) on ordered vertex pairs (diagonal ignored).
class Requirement {
 public:
  Requirement() = default;
  explicit Requirement(int n) : n_(n), r_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  static Requirement uniform(int n, int value);

  int size() const { return n_; }
  int operator()(VertexId x, VertexId y) const { return x == y ? 0 : r_[index(x, y)]; }
  void set(VertexId x, VertexId y, int value);
  int max_value() const;

  /// lambda_M(x, y) >= r(x, y) for every ordered pair.
  bool satisfied_by(const MixedGraph& m) const;

  bool operator==(const Requirement&) const = default;

 private:
  std::size_t index(VertexId x, VertexId y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y);
  }
  int n_ = 0;
  std::vector<int> r_;
};

/// What a modified (mixed) graph must satisfy.
struct ConnectivityTarget {
  enum class Kind { vertex_strong, arc_strong, requirement };
  Kind kind = Kind::arc_strong;
  int k = 1;
  Requirement r;

  static ConnectivityTarget strong(int l) { return {Kind::vertex_strong, l, {}}; }
  static ConnectivityTarget arc(int k) { return {Kind::arc_strong, k, {}}; }
  static ConnectivityTarget requirement(Requirement r) { return {Kind::requirement, 0, std::move(r)}; }

  bool satisfied_by(const MixedGraph& m) const;
};

struct SearchOptions {
  std::int64_t node_limit = 20'000'000;
  /// Restrict the search to solutions of cost at most this value (decision mode).
  std::optional<Rational> budget;
  std::vector<int> required;   ///< elements forced into the solution
  std::vector<int> forbidden;  ///< elements never used
};

/// Minimum number of arcs whose reversal makes D meet `target` (vertex_strong or arc_strong).
SolveResult min_reversals(const MixedGraph& d, const ConnectivityTarget& target, const SearchOptions& options = {});

/// Minimum number of arcs whose deorientation makes D meet `target`.
SolveResult min_deorientations(const MixedGraph& d, const ConnectivityTarget& target,
                               const SearchOptions& options = {});

struct DoublingTarget {
  int c = 4;
  /// Additionally demand that G' - v is 2-edge-connected for every vertex v.
  bool vertex_deleted_two_edge_connected = false;

  bool satisfied_by(const MixedGraph& g) const;
};

/// Minimum-weight edge set whose doubling meets `target`; unit weights when `weights` is empty.
SolveResult min_doubling(const MixedGraph& g, const DoublingTarget& target,
                         const std::vector<Rational>& weights = {}, const SearchOptions& options = {});

/// Maximum number of edges that can be oriented while the mixed graph meets `target`
/// (vertex_strong or arc_strong). Witness: EdgeChoice codes per edge.
SolveResult max_partial_orientation(const MixedGraph& g, const ConnectivityTarget& target,
                                    const SearchOptions& options = {});

/// An orientation of every edge meeting `target` (optimum 0 when one exists).
/// Witness: EdgeChoice codes per edge (forward/backward only).
SolveResult find_orientation(const MixedGraph& g, const ConnectivityTarget& target, const SearchOptions& options = {});

SolveResult best_orientation_for_requirement(const MixedGraph& g, const Requirement& r,
                                             const SearchOptions& options = {});

/// Minimum vertex cover; witness lists the cover in increasing order.
SolveResult vertex_cover(const MixedGraph& g, const SearchOptions& options = {});

/// Maximum number of simultaneously satisfiable clauses; witness is the 0/1 assignment
/// (first in order of increasing binary value with variable 0 as the lowest bit).
SolveResult max2sat(const SatInstance& instance, const SearchOptions& options = {});

/// Exhaustive enumerations are refused beyond this many free elements.
inline constexpr int kMaxEnumeratedElements = 22;

}  // namespace reorient
