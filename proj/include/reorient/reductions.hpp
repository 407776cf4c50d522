#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reorient/exact.hpp"
#include "reorient/graph.hpp"
#include "reorient/sat.hpp"

namespace reorient {

/// Target instance of a reduction. Edge and arc provenance lives in the graph labels;
/// vertex provenance in `vertex_roles`.
struct ReductionWitness {
  MixedGraph instance;
  std::optional<Requirement> requirement;
  int budget = 0;
  std::vector<std::string> vertex_roles;
};

// ---------------------------------------------------------------------------------------
// Rockets

enum class RocketKind { out, in };

/// Vertex and arc ids of a rocket inside some host digraph.
struct RocketLayout {
  RocketKind kind = RocketKind::out;
  int k = 0;
  std::vector<VertexId> x, y, z;  ///< index i holds x_i (i = 0 is exterior)
  VertexId u = 0;
  VertexId v_star = 0;
  std::vector<int> arcs;  ///< all rocket arcs, in definition order
  int tip = 0;            ///< the arc between u and v*

  std::array<VertexId, 4> exterior() const { return {x[0], y[0], z[0], v_star}; }
  std::vector<VertexId> interior() const;
};

struct Rocket {
  MixedGraph graph;
  RocketLayout layout;
};

/// Standalone rocket: exterior vertices 0..3 are x0, y0, z0, v*. Throws for k < 1.
Rocket build_rocket(RocketKind kind, int k);

/// Appends the interior of a rocket to `host`, attached to the given exterior vertices.
/// `tag` prefixes the labels of new arcs and roles of new vertices.
RocketLayout place_rocket(MixedGraph& host, std::vector<std::string>& roles, RocketKind kind, int k, VertexId x0,
                          VertexId y0, VertexId z0, VertexId v_star, const std::string& tag);

// ---------------------------------------------------------------------------------------
// Independent 2-strong orientation of mixed graphs -> minimum 2-strong arc reversal

struct I2vcomgReduction {
  ReductionWitness witness;  ///< digraph D with budget |E(M)|
  MixedGraph source;
  std::vector<VertexId> terminals;
  std::vector<int> linking_arc;                ///< per edge of M: arc of D between its two ends
  std::vector<VertexId> chosen_end;            ///< per arc a of M: v_a
  std::vector<RocketLayout> rockets;           ///< per arc of M
  std::vector<std::vector<VertexId>> houses;   ///< per vertex of M: X_v (or {t} for terminals)
};

I2vcomgReduction reduce_i2vcomg_to_m2sar(const MixedGraph& m, std::span<const VertexId> terminals);

/// Reverse the linking arcs of edges oriented against their stored direction.
std::vector<int> lift_orientation_to_reversals(const I2vcomgReduction& red, std::span<const EdgeChoice> orientation);

/// Edge uv is oriented from u to v exactly when its linking arc still points that way.
std::vector<EdgeChoice> lift_reversals_to_orientation(const I2vcomgReduction& red, std::span<const int> reversed);

/// 2-arc-strong orientation whose deletion of any terminal leaves a strong digraph.
bool is_i2vcomg_orientation(const MixedGraph& m, std::span<const VertexId> terminals,
                            std::span<const EdgeChoice> orientation);

/// Exhaustive search over all orientations (at most kMaxEnumeratedElements edges).
std::optional<std::vector<EdgeChoice>> find_i2vcomg_orientation(const MixedGraph& m,
                                                                std::span<const VertexId> terminals);

// ---------------------------------------------------------------------------------------
// Vertex cover on twice-subdivided cubic graphs

struct ClassGInstance {
  MixedGraph graph;  ///< cubic vertices keep their ids, subdivision vertices follow
  MixedGraph cubic;
  std::vector<std::array<VertexId, 2>> subdivision;  ///< per cubic edge uv: {next to u, next to v}
  std::vector<VertexId> core;                         ///< cubic vertex -> vertex of `graph`
};

/// Subdivides every edge twice. Throws GraphError unless the input is cubic and 2-connected.
ClassGInstance class_g_instance(const MixedGraph& cubic);

/// Recovers the cubic graph behind a member of the class; throws GraphError for non-members.
ClassGInstance recognize_class_g(const MixedGraph& g);

struct PathDecomposition {
  std::vector<std::array<VertexId, 2>> one_paths;
  std::vector<int> one_path_edge;
  std::vector<std::array<VertexId, 3>> two_paths;  ///< u, v, w with v the middle vertex
  std::vector<std::array<int, 2>> two_path_edges;  ///< edges uv and vw
};

/// At every degree-3 vertex the two lowest-index incident edges form a 2-path; the
/// remaining edges are 1-paths (in edge order).
PathDecomposition legal_decomposition(const MixedGraph& g);

bool is_legal_decomposition(const MixedGraph& g, const PathDecomposition& p);

/// Cover of the cubic graph -> cover of the subdivision (one extra vertex per edge).
std::vector<VertexId> lift_cover_to_subdivision(const ClassGInstance& inst, std::span<const VertexId> cover);

/// Cover of the subdivision -> cover of the cubic graph of size at most |cover| - |E(cubic)|.
std::vector<VertexId> project_cover_from_subdivision(const ClassGInstance& inst, std::span<const VertexId> cover);

// ---------------------------------------------------------------------------------------
// Vertex cover -> 4-edge-connectivity by doubling

struct PathGadget {
  std::array<VertexId, 3> path{};       ///< u, v, w in G
  std::array<VertexId, 11> vertices{};  ///< x^u, x^v, x^w, x^1, ..., x^8
  std::array<int, 17> edges{};          ///< in the order u2 u3 u4 u5 v1 v8 w7 w8 12 18 23 34 45 56 67 68 78
};

struct VcTo4edaReduction {
  ReductionWitness witness;  ///< graph H with budget k + |V(G)|
  MixedGraph source;
  int k = 0;
  PathDecomposition decomposition;
  VertexId hub = 0;
  std::vector<VertexId> one_path_vertex;  ///< x_P per 1-path
  std::vector<int> hub_edge;              ///< x_P y per 1-path
  std::vector<PathGadget> gadgets;        ///< per 2-path
  std::vector<int> link_edge;             ///< e_v per vertex of G
};

/// Requires G in the class and |V(G)| >= 5.
VcTo4edaReduction reduce_vc_to_4eda(const MixedGraph& g, int k);

std::vector<int> lift_cover_to_doubling(const VcTo4edaReduction& red, std::span<const VertexId> cover);

/// Normalises a feasible doubling set so that every path is covered by link edges, then reads
/// off {v : e_v doubled}. The result has at most |doubled| - |V(G)| vertices.
std::vector<VertexId> lift_doubling_to_cover(const VcTo4edaReduction& red, std::span<const int> doubled);

/// The 3-edge-cuts of H predicted by the construction, as vertex sides not containing the hub.
std::vector<std::vector<VertexId>> predicted_three_edge_cuts(const VcTo4edaReduction& red);

// ---------------------------------------------------------------------------------------
// Bounded MAX 2-SAT -> 3-strong deorientation

struct NormalizedSat {
  SatInstance instance;
  std::vector<bool> flipped;  ///< variables whose literals were negated
};

/// Negates every variable occurring twice negated. Requires 2-literal clauses and exactly
/// three occurrences per variable with both polarities present.
NormalizedSat normalize_to_s3bmax2sat(const SatInstance& sat);

struct SdoVariableGadget {
  std::array<int, 3> clauses{};  ///< C1, C2, C3 with x in C1, C3 and its negation in C2
  std::array<VertexId, 3> p{}, q{}, s_pair{};
  VertexId p_x = 0, q_x = 0;
  std::array<VertexId, 4> s{};  ///< s_x^1..s_x^4
  std::array<VertexId, 4> w{};  ///< w_x^1..w_x^4
  std::array<int, 6> true_menu{};
  std::array<int, 6> false_menu{};
  int negated_entry = 0;  ///< the arc q_(x,C2) v_C2
};

struct SdoReduction {
  ReductionWitness witness;  ///< digraph D with budget 6|X| + |C| - l
  SatInstance source;
  int ell = 0;
  std::vector<SdoVariableGadget> variables;
  std::vector<VertexId> clause_vertex;  ///< v_C
  std::vector<VertexId> clause_hub;     ///< s_C
  std::vector<int> clause_arc;          ///< s_C v_C
  std::vector<VertexId> hub_set;        ///< S
};

SdoReduction reduce_s3bmax2sat_to_3sdo(const SatInstance& sat, int ell);

std::vector<int> lift_assignment_to_deorientation(const SdoReduction& red, const std::vector<bool>& assignment);

/// x is TRUE exactly when q_(x,C2) v_C2 is not deoriented.
std::vector<bool> lift_deorientation_to_assignment(const SdoReduction& red, std::span<const int> deoriented);

/// Adds l - 3 vertices joined by digons to every vertex and to each other. Requires l >= 4.
ReductionWitness lift_3sdo_to_lstrong(const MixedGraph& d, int budget, int ell);

// ---------------------------------------------------------------------------------------
// Local connectivity orientation -> local connectivity deorientation

struct HardenedLco {
  MixedGraph graph;  ///< G plus a, b, edge ab, then edges xa and then edges xb
  Requirement requirement;
  VertexId a = 0, b = 0;
  int ab_edge = 0;
};

HardenedLco harden_lco(const MixedGraph& g, const Requirement& r);

std::vector<EdgeChoice> lift_orientation_to_hardened(const HardenedLco& h, std::span<const EdgeChoice> orientation);

/// Restricts an orientation of the hardened graph to G after flipping a directed cycle
/// through ab when ab points from a to b.
std::vector<EdgeChoice> lift_orientation_from_hardened(const HardenedLco& h, std::span<const EdgeChoice> orientation);

struct LcdoReduction {
  ReductionWitness witness;  ///< digraph D, requirement r', budget |E(G)|
  MixedGraph source;
  std::vector<VertexId> edge_vertex;         ///< w_e
  std::vector<std::array<int, 2>> edge_arcs;  ///< arcs u w_e and v w_e for e = uv
};

/// Requires r(x, y) >= 1 for all distinct x, y.
LcdoReduction reduce_lco_to_lcdo(const MixedGraph& g, const Requirement& r);

std::vector<int> lift_orientation_to_deorientation(const LcdoReduction& red, std::span<const EdgeChoice> orientation);

/// Edge uv is oriented u -> v when v w_e is deoriented.
std::vector<EdgeChoice> lift_deorientation_to_orientation(const LcdoReduction& red, std::span<const int> deoriented);

}  // namespace reorient
