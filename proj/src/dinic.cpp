#include "reorient/detail/dinic.hpp"

#include <algorithm>
#include <queue>

namespace reorient::detail {

Dinic::Dinic(int num_nodes) : adjacency_(static_cast<std::size_t>(num_nodes)) {}

int Dinic::add_edge(int from, int to, std::int64_t capacity) {
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({to, capacity, capacity});
  edges_.push_back({from, 0, 0});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id;
}

void Dinic::add_undirected(int a, int b, std::int64_t capacity) {
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({b, capacity, capacity});
  edges_.push_back({a, capacity, capacity});
  adjacency_[a].push_back(id);
  adjacency_[b].push_back(id + 1);
}

void Dinic::reset() {
  for (auto& e : edges_) e.capacity = e.initial;
}

bool Dinic::build_levels(int source, int sink) {
  level_.assign(adjacency_.size(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int id : adjacency_[u]) {
      const auto& e = edges_[id];
      if (e.capacity > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[u] + 1;
        queue.push(e.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t Dinic::push(int node, int sink, std::int64_t amount) {
  if (node == sink) return amount;
  for (auto& i = cursor_[node]; i < adjacency_[node].size(); ++i) {
    const int id = adjacency_[node][i];
    auto& e = edges_[id];
    if (e.capacity <= 0 || level_[e.to] != level_[node] + 1) continue;
    const std::int64_t pushed = push(e.to, sink, std::min(amount, e.capacity));
    if (pushed > 0) {
      e.capacity -= pushed;
      edges_[id ^ 1].capacity += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t Dinic::run(int source, int sink, std::int64_t limit) {
  if (source == sink) return 0;
  std::int64_t total = 0;
  while (total < limit && build_levels(source, sink)) {
    cursor_.assign(adjacency_.size(), 0);
    while (total < limit) {
      const std::int64_t pushed = push(source, sink, limit - total);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

std::vector<char> Dinic::reachable_from(int source) const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int id : adjacency_[u]) {
      const auto& e = edges_[id];
      if (e.capacity > 0 && !seen[e.to]) {
        seen[e.to] = 1;
        stack.push_back(e.to);
      }
    }
  }
  return seen;
}

}  // namespace reorient::detail
