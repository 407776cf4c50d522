#include "reorient/flow.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "reorient/detail/dinic.hpp"

namespace reorient {

FlowNetwork::FlowNetwork(int num_nodes, int source, int sink)
    : num_nodes_(num_nodes), source_(source), sink_(sink) {
  if (num_nodes < 2) throw std::invalid_argument("flow network needs at least two nodes");
  if (source < 0 || source >= num_nodes || sink < 0 || sink >= num_nodes) {
    throw std::invalid_argument("source or sink out of range");
  }
  if (source == sink) throw std::invalid_argument("source equals sink");
}

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity, Rational cost, std::int64_t lower) {
  if (from < 0 || from >= num_nodes_ || to < 0 || to >= num_nodes_) {
    throw std::invalid_argument("flow arc endpoint out of range");
  }
  if (capacity < 0 || lower < 0) throw std::invalid_argument("negative capacity or lower bound");
  if (cost < 0) throw std::invalid_argument("negative arc cost");
  arcs_.push_back(FlowArc{from, to, lower, capacity, cost});
  return static_cast<int>(arcs_.size()) - 1;
}

namespace {

constexpr std::int64_t kInf = detail::Dinic::kInfinity;

bool bounds_consistent(const FlowNetwork& net) {
  return std::all_of(net.arcs().begin(), net.arcs().end(),
                     [](const FlowArc& a) { return a.lower <= a.capacity; });
}

// Residual network with rational costs, used by successive shortest paths.
class CostResidual {
 public:
  explicit CostResidual(int n) : adjacency_(static_cast<std::size_t>(n)) {}

  int add(int from, int to, std::int64_t cap, Rational cost) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, cap, cost});
    arcs_.push_back({from, 0, -cost});
    adjacency_[from].push_back(id);
    adjacency_[to].push_back(id + 1);
    return id;
  }

  std::int64_t flow_on(int id) const { return arcs_[id ^ 1].cap; }

  // Min-cost max-flow from s to t; returns the flow value.
  std::int64_t run(int s, int t) {
    const int n = static_cast<int>(adjacency_.size());
    std::int64_t total = 0;
    while (true) {
      std::vector<std::optional<Rational>> dist(n);
      std::vector<int> via(n, -1);
      dist[s] = Rational(0);
      // Bellman-Ford; residual graphs here are small.
      for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (int u = 0; u < n; ++u) {
          if (!dist[u]) continue;
          for (int id : adjacency_[u]) {
            const auto& a = arcs_[id];
            if (a.cap <= 0) continue;
            const Rational cand = *dist[u] + a.cost;
            if (!dist[a.to] || cand < *dist[a.to]) {
              dist[a.to] = cand;
              via[a.to] = id;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (!dist[t]) break;
      std::int64_t bottleneck = kInf;
      for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) bottleneck = std::min(bottleneck, arcs_[via[v]].cap);
      for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= bottleneck;
        arcs_[via[v] ^ 1].cap += bottleneck;
      }
      total += bottleneck;
    }
    return total;
  }

 private:
  struct ResidualArc {
    int to;
    std::int64_t cap;
    Rational cost;
  };
  std::vector<ResidualArc> arcs_;
  std::vector<std::vector<int>> adjacency_;
};

std::int64_t net_out_of_source(const FlowNetwork& net, const std::vector<std::int64_t>& flow) {
  std::int64_t value = 0;
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    const auto& a = net.arcs()[i];
    if (a.from == net.source()) value += flow[i];
    if (a.to == net.source()) value -= flow[i];
  }
  return value;
}

Rational total_cost(const FlowNetwork& net, const std::vector<std::int64_t>& flow) {
  Rational cost = 0;
  for (std::size_t i = 0; i < net.arcs().size(); ++i) cost += net.arcs()[i].cost * flow[i];
  return cost;
}

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  FlowResult result;
  if (!bounds_consistent(net)) return result;
  const int n = net.num_nodes();
  const auto& arcs = net.arcs();
  std::vector<std::int64_t> flow(arcs.size(), 0);

  const bool has_lower = std::any_of(arcs.begin(), arcs.end(), [](const FlowArc& a) { return a.lower > 0; });
  if (has_lower) {
    // Phase 1: find any feasible flow via the excess transformation.
    const int super_source = n;
    const int super_sink = n + 1;
    detail::Dinic phase1(n + 2);
    std::vector<int> ids(arcs.size());
    std::vector<std::int64_t> excess(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      ids[i] = phase1.add_edge(arcs[i].from, arcs[i].to, arcs[i].capacity - arcs[i].lower);
      excess[arcs[i].to] += arcs[i].lower;
      excess[arcs[i].from] -= arcs[i].lower;
    }
    phase1.add_edge(net.sink(), net.source(), kInf);
    std::int64_t demand = 0;
    for (int v = 0; v < n; ++v) {
      if (excess[v] > 0) {
        phase1.add_edge(super_source, v, excess[v]);
        demand += excess[v];
      } else if (excess[v] < 0) {
        phase1.add_edge(v, super_sink, -excess[v]);
      }
    }
    if (phase1.run(super_source, super_sink) != demand) return result;
    for (std::size_t i = 0; i < arcs.size(); ++i) flow[i] = arcs[i].lower + phase1.flow_on(ids[i]);
  }

  // Phase 2: augment from the feasible flow while respecting lower bounds.
  detail::Dinic phase2(n);
  std::vector<int> forward(arcs.size());
  std::vector<int> backward(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    forward[i] = phase2.add_edge(arcs[i].from, arcs[i].to, arcs[i].capacity - flow[i]);
    backward[i] = phase2.add_edge(arcs[i].to, arcs[i].from, flow[i] - arcs[i].lower);
  }
  phase2.run(net.source(), net.sink());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    flow[i] += phase2.flow_on(forward[i]) - phase2.flow_on(backward[i]);
  }
  result.feasible = true;
  result.flow = std::move(flow);
  result.value = net_out_of_source(net, result.flow);
  result.cost = total_cost(net, result.flow);
  return result;
}

FlowResult min_cost_feasible_flow(const FlowNetwork& net) {
  FlowResult result;
  if (!bounds_consistent(net)) return result;
  const int n = net.num_nodes();
  const auto& arcs = net.arcs();
  const int super_source = n;
  const int super_sink = n + 1;
  CostResidual residual(n + 2);
  std::vector<int> ids(arcs.size());
  std::vector<std::int64_t> excess(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    ids[i] = residual.add(arcs[i].from, arcs[i].to, arcs[i].capacity - arcs[i].lower, arcs[i].cost);
    excess[arcs[i].to] += arcs[i].lower;
    excess[arcs[i].from] -= arcs[i].lower;
  }
  residual.add(net.sink(), net.source(), kInf, Rational(0));
  std::int64_t demand = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      residual.add(super_source, v, excess[v], Rational(0));
      demand += excess[v];
    } else if (excess[v] < 0) {
      residual.add(v, super_sink, -excess[v], Rational(0));
    }
  }
  if (residual.run(super_source, super_sink) != demand) return result;
  result.feasible = true;
  result.flow.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) result.flow[i] = arcs[i].lower + residual.flow_on(ids[i]);
  result.value = net_out_of_source(net, result.flow);
  result.cost = total_cost(net, result.flow);
  return result;
}

}  // namespace reorient
