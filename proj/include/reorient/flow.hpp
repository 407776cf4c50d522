#pragma once

#include <cstdint>
#include <vector>

#include "reorient/rational.hpp"

namespace reorient {

struct FlowArc {
  int from = 0;
  int to = 0;
  std::int64_t lower = 0;
  std::int64_t capacity = 0;
  Rational cost = 0;
};

/// Integral (s,t)-network with lower bounds and non-negative rational costs.
class FlowNetwork {
 public:
  FlowNetwork(int num_nodes, int source, int sink);

  int add_arc(int from, int to, std::int64_t capacity, Rational cost = 0, std::int64_t lower = 0);

  int num_nodes() const { return num_nodes_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<FlowArc>& arcs() const { return arcs_; }

 private:
  int num_nodes_;
  int source_;
  int sink_;
  std::vector<FlowArc> arcs_;
};

struct FlowResult {
  bool feasible = false;
  std::int64_t value = 0;  ///< net flow leaving the source
  Rational cost = 0;
  std::vector<std::int64_t> flow;  ///< per arc, lower bounds included
};

/// Maximum feasible (s,t)-flow. Infeasible lower bounds give `feasible == false`.
FlowResult max_flow(const FlowNetwork& network);

/// Minimum-cost feasible (s,t)-flow of any value (successive shortest paths on the
/// lower-bound excess transformation).
FlowResult min_cost_feasible_flow(const FlowNetwork& network);

}  // namespace reorient
