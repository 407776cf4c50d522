#include "reorient/detail/matroid.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace reorient::detail {

ForestUnionOracle::ForestUnionOracle(int num_vertices, int k, std::vector<std::pair<int, int>> ends)
    : n_(num_vertices), k_(k), ends_(std::move(ends)), forest_(ends_.size(), -1) {}

std::vector<int> ForestUnionOracle::forest_path(int f, int u, int v, bool& connected) const {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n_));
  for (std::size_t e = 0; e < ends_.size(); ++e) {
    if (forest_[e] != f) continue;
    adj[ends_[e].first].push_back({ends_[e].second, static_cast<int>(e)});
    adj[ends_[e].second].push_back({ends_[e].first, static_cast<int>(e)});
  }
  std::vector<int> via(static_cast<std::size_t>(n_), -2);
  std::vector<int> prev(static_cast<std::size_t>(n_), -1);
  std::deque<int> queue{u};
  via[u] = -1;
  while (!queue.empty() && via[v] == -2) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& [y, e] : adj[x]) {
      if (via[y] != -2) continue;
      via[y] = e;
      prev[y] = x;
      queue.push_back(y);
    }
  }
  connected = via[v] != -2;
  std::vector<int> path;
  if (!connected) return path;
  for (int x = v; x != u; x = prev[x]) path.push_back(via[x]);
  return path;
}

std::optional<std::pair<int, int>> ForestUnionOracle::search(int x, std::vector<int>& parent) const {
  parent.assign(ends_.size(), -2);
  parent[x] = -1;
  std::deque<int> queue{x};
  while (!queue.empty()) {
    const int e = queue.front();
    queue.pop_front();
    for (int f = 0; f < k_; ++f) {
      if (f == forest_[e]) continue;
      bool connected = false;
      const auto path = forest_path(f, ends_[e].first, ends_[e].second, connected);
      if (!connected) return std::pair{e, f};
      for (int g : path) {
        if (parent[g] != -2) continue;
        parent[g] = e;
        queue.push_back(g);
      }
    }
  }
  return std::nullopt;
}

bool ForestUnionOracle::insert(int x) {
  if (ends_[x].first == ends_[x].second) return false;
  std::vector<int> parent;
  const auto hit = search(x, parent);
  if (!hit) return false;
  // Each element on the path moves into the forest vacated by its successor.
  int cur = hit->first;
  int target = hit->second;
  while (true) {
    const int old = forest_[cur];
    forest_[cur] = target;
    if (cur == x) break;
    target = old;
    cur = parent[cur];
  }
  return true;
}

void ForestUnionOracle::reset(const std::vector<int>& current) {
  std::fill(forest_.begin(), forest_.end(), -1);
  for (int e : current) {
    if (!insert(e)) throw std::logic_error("reset with a dependent set");
  }
}

bool ForestUnionOracle::can_add(int x) {
  if (ends_[x].first == ends_[x].second) return false;
  std::vector<int> parent;
  return search(x, parent).has_value();
}

bool ForestUnionOracle::can_exchange(int y, int x) {
  const int saved = forest_[y];
  forest_[y] = -1;
  const bool ok = can_add(x);
  forest_[y] = saved;
  return ok;
}

PartitionOracle::PartitionOracle(std::vector<int> group_of, std::vector<int> capacity)
    : group_(std::move(group_of)), cap_(std::move(capacity)), used_(cap_.size(), 0) {}

void PartitionOracle::reset(const std::vector<int>& current) {
  std::fill(used_.begin(), used_.end(), 0);
  for (int e : current) {
    if (++used_[group_[e]] > cap_[group_[e]]) throw std::logic_error("reset with a dependent set");
  }
}

bool PartitionOracle::can_add(int x) { return used_[group_[x]] < cap_[group_[x]]; }

bool PartitionOracle::can_exchange(int y, int x) { return group_[x] == group_[y] || can_add(x); }

std::optional<std::vector<int>> min_weight_common_independent(int ground_size, const std::vector<Rational>& weights,
                                                               ExchangeOracle& m1, ExchangeOracle& m2, int size) {
  std::vector<char> in(static_cast<std::size_t>(ground_size), 0);
  std::vector<int> current;
  while (static_cast<int>(current.size()) < size) {
    m1.reset(current);
    m2.reset(current);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(ground_size));
    std::vector<char> sink(static_cast<std::size_t>(ground_size), 0);
    std::vector<Rational> length(static_cast<std::size_t>(ground_size));
    struct Label {
      bool reached = false;
      Rational dist = 0;
      int hops = 0;
      int prev = -1;
    };
    std::vector<Label> label(static_cast<std::size_t>(ground_size));
    for (int x = 0; x < ground_size; ++x) {
      length[x] = in[x] ? -weights[x] : weights[x];
      if (in[x]) continue;
      if (m1.can_add(x)) label[x] = {true, length[x], 1, -1};
      sink[x] = m2.can_add(x);
      for (int y : current) {
        if (m1.can_exchange(y, x)) out[y].push_back(x);
        if (m2.can_exchange(y, x)) out[x].push_back(y);
      }
    }
    // Bellman-Ford on vertex lengths, comparing (length, hops) lexicographically.
    for (int round = 0; round < ground_size; ++round) {
      bool changed = false;
      for (int a = 0; a < ground_size; ++a) {
        if (!label[a].reached) continue;
        for (int b : out[a]) {
          const Rational d = label[a].dist + length[b];
          const int h = label[a].hops + 1;
          if (!label[b].reached || d < label[b].dist || (d == label[b].dist && h < label[b].hops)) {
            label[b] = {true, d, h, a};
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    int best = -1;
    for (int x = 0; x < ground_size; ++x) {
      if (!sink[x] || !label[x].reached) continue;
      if (best < 0 || label[x].dist < label[best].dist ||
          (label[x].dist == label[best].dist && label[x].hops < label[best].hops)) {
        best = x;
      }
    }
    if (best < 0) return std::nullopt;
    for (int x = best; x >= 0; x = label[x].prev) in[x] = !in[x];
    current.clear();
    for (int x = 0; x < ground_size; ++x) {
      if (in[x]) current.push_back(x);
    }
  }
  return current;
}

}  // namespace reorient::detail
