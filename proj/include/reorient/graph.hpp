#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reorient {

/// Dense vertex index, contiguous 0..n-1 within one graph.
using VertexId = int;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine would exceed its configured size or node budget.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge. Parallel edges are distinct entries distinguished by index.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  std::string label;

  bool operator==(const Edge&) const = default;
};

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  std::string label;

  bool operator==(const Arc&) const = default;
};

/// Mixed multigraph M = (V, E, A) without loops. A digraph has no edges, a graph has no arcs.
///
/// The add_* members are builders; the free functions below treat graphs as values and
/// return new graphs.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(int num_vertices);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }
  const Arc& arc(int index) const { return arcs_.at(static_cast<std::size_t>(index)); }

  bool is_digraph() const { return edges_.empty(); }
  bool is_graph() const { return arcs_.empty(); }

  VertexId add_vertex();
  VertexId add_vertices(int count);
  int add_edge(VertexId u, VertexId v, std::string label = {});
  int add_arc(VertexId tail, VertexId head, std::string label = {});

  bool valid_vertex(VertexId v) const { return v >= 0 && v < n_; }

  bool operator==(const MixedGraph&) const = default;

 private:
  void check_pair(VertexId a, VertexId b, const char* what) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
};

/// A graph obtained from a vertex edit, with the old->new index map (-1 for removed vertices).
struct VertexMapped {
  MixedGraph graph;
  std::vector<VertexId> old_to_new;
};

VertexMapped delete_vertices(const MixedGraph& g, std::span<const VertexId> removed);

/// Swaps head and tail of the listed arcs. The input must be a digraph.
MixedGraph reverse_arcs(const MixedGraph& d, std::span<const int> arc_indices);

/// Replaces each listed arc by an edge on the same endpoints. Remaining arcs keep their
/// relative order; new edges are appended in increasing arc-index order.
MixedGraph deorient_arcs(const MixedGraph& m, std::span<const int> arc_indices);

/// Adds the opposite arc of every listed arc (connectivity-equivalent to deorienting them).
MixedGraph add_opposite_arcs(const MixedGraph& m, std::span<const int> arc_indices);

/// Greedily pairs opposite arcs (lowest index first) into edges until no digon remains.
MixedGraph digon_to_edge(const MixedGraph& m);

/// Replaces every edge uv by the arcs uv and vu.
MixedGraph edge_to_digon(const MixedGraph& m);

/// Adds one parallel copy of each listed edge.
MixedGraph double_edges(const MixedGraph& g, std::span<const int> edge_indices);

/// UG(M): every arc becomes an edge (arcs appended after the original edges).
MixedGraph underlying_graph(const MixedGraph& m);

/// Merges X into one vertex, dropping elements that become loops. Surviving vertices keep
/// their relative order and the merged vertex takes the position of min(X).
VertexMapped contract(const MixedGraph& m, std::span<const VertexId> merged);

/// Replaces each listed edge by a path with `times` new interior vertices.
MixedGraph subdivide(const MixedGraph& g, std::span<const int> edge_indices, int times);

MixedGraph subdivide_all(const MixedGraph& g, int times);

/// Mixed-graph degrees as used by the degree conditions: d+ counts out-arcs, d- in-arcs, d edges.
struct VertexDegrees {
  int out = 0;
  int in = 0;
  int undirected = 0;
};

std::vector<VertexDegrees> degrees(const MixedGraph& m);

/// Relabels vertices by `perm` (new id of old vertex v is perm[v]).
MixedGraph relabel(const MixedGraph& m, std::span<const VertexId> perm);

/// Per-edge decision of a partial orientation; `forward` orients edge uv as u->v.
enum class EdgeChoice : int { keep = 0, forward = 1, backward = 2 };

struct PartialOrientation {
  MixedGraph source;
  std::vector<EdgeChoice> decisions;

  /// Kept edges in source order, then the oriented edges as arcs in source order.
  MixedGraph realize() const;
  int oriented_count() const;
};

}  // namespace reorient
