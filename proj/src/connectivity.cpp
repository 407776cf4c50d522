#include "reorient/connectivity.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <string>

#include "reorient/detail/bitgraph.hpp"
#include "reorient/detail/dinic.hpp"

namespace reorient {

namespace {

constexpr std::int64_t kInf = detail::Dinic::kInfinity;

void require_distinct(const MixedGraph& m, VertexId x, VertexId y) {
  if (!m.valid_vertex(x) || !m.valid_vertex(y)) throw GraphError("vertex out of range");
  if (x == y) throw GraphError("connectivity query needs two distinct vertices");
}

// Unit-capacity network in which every edge is usable in one direction.
detail::Dinic arc_network(const MixedGraph& m, bool arcs_as_edges) {
  detail::Dinic net(m.num_vertices());
  for (const auto& e : m.edges()) net.add_undirected(e.u, e.v, 1);
  for (const auto& a : m.arcs()) {
    if (arcs_as_edges) {
      net.add_undirected(a.tail, a.head, 1);
    } else {
      net.add_edge(a.tail, a.head, 1);
    }
  }
  return net;
}

bool directly_joined(const MixedGraph& m, VertexId x, VertexId y) {
  for (const auto& e : m.edges()) {
    if ((e.u == x && e.v == y) || (e.u == y && e.v == x)) return true;
  }
  for (const auto& a : m.arcs()) {
    if (a.tail == x && a.head == y) return true;
  }
  return false;
}

// Internally disjoint x->y paths avoiding the direct x-y connection, stopping at `limit`.
int split_paths(const MixedGraph& m, VertexId x, VertexId y, int limit) {
  const int n = m.num_vertices();
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  detail::Dinic net(2 * n);
  for (int v = 0; v < n; ++v) net.add_edge(in(v), out(v), (v == x || v == y) ? kInf : 1);
  auto link = [&](int from, int to) {
    if (from == x && to == y) return;
    net.add_edge(out(from), in(to), kInf);
  };
  for (const auto& e : m.edges()) {
    link(e.u, e.v);
    link(e.v, e.u);
  }
  for (const auto& a : m.arcs()) link(a.tail, a.head);
  return static_cast<int>(net.run(out(x), in(y), limit));
}

int vertex_paths(const MixedGraph& m, VertexId x, VertexId y, int limit) {
  const int direct = directly_joined(m, x, y) ? 1 : 0;
  if (direct >= limit) return direct;
  return direct + split_paths(m, x, y, limit - direct);
}

void sort_cuts(std::vector<CutSet>& cuts) {
  std::sort(cuts.begin(), cuts.end(), [](const CutSet& a, const CutSet& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.side < b.side;
  });
}

}  // namespace

CutSet cut_of(const MixedGraph& m, std::span<const VertexId> side) {
  std::vector<char> in_x(static_cast<std::size_t>(m.num_vertices()), 0);
  CutSet cut;
  for (VertexId v : side) {
    if (!m.valid_vertex(v)) throw GraphError("cut side has a vertex out of range");
    if (!in_x[v]) cut.side.push_back(v);
    in_x[v] = 1;
  }
  std::sort(cut.side.begin(), cut.side.end());
  for (int i = 0; i < m.num_edges(); ++i) {
    const auto& e = m.edge(i);
    if (in_x[e.u] != in_x[e.v]) cut.crossing_edges.push_back(i);
  }
  for (int i = 0; i < m.num_arcs(); ++i) {
    const auto& a = m.arc(i);
    if (in_x[a.tail] && !in_x[a.head]) cut.leaving_arcs.push_back(i);
    if (!in_x[a.tail] && in_x[a.head]) cut.entering_arcs.push_back(i);
  }
  cut.d = static_cast<int>(cut.crossing_edges.size());
  cut.d_plus = static_cast<int>(cut.leaving_arcs.size());
  cut.d_minus = static_cast<int>(cut.entering_arcs.size());
  return cut;
}

int local_arc_connectivity(const MixedGraph& m, VertexId x, VertexId y) {
  require_distinct(m, x, y);
  auto net = arc_network(m, false);
  return static_cast<int>(net.run(x, y));
}

int local_edge_connectivity(const MixedGraph& g, VertexId x, VertexId y) {
  require_distinct(g, x, y);
  auto net = arc_network(g, true);
  return static_cast<int>(net.run(x, y));
}

CutSet min_cut_between(const MixedGraph& m, VertexId x, VertexId y) {
  require_distinct(m, x, y);
  auto net = arc_network(m, false);
  net.run(x, y);
  const auto reach = net.reachable_from(x);
  std::vector<VertexId> side;
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (reach[v]) side.push_back(v);
  }
  return cut_of(m, side);
}

int local_vertex_connectivity(const MixedGraph& m, VertexId x, VertexId y) {
  require_distinct(m, x, y);
  return vertex_paths(m, x, y, INT_MAX);
}

bool is_strong(const MixedGraph& m) { return is_k_arc_strong(m, 1); }

bool is_k_arc_strong(const MixedGraph& m, int k) {
  if (k <= 0 || m.num_vertices() <= 1) return true;
  auto net = arc_network(m, false);
  for (int v = 1; v < m.num_vertices(); ++v) {
    net.reset();
    if (net.run(0, v, k) < k) return false;
    net.reset();
    if (net.run(v, 0, k) < k) return false;
  }
  return true;
}

bool is_k_strong(const MixedGraph& m, int k) {
  const int n = m.num_vertices();
  if (n <= k) return false;
  if (k <= 0) return true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || directly_joined(m, x, y)) continue;
      if (split_paths(m, x, y, k) < k) return false;
    }
  }
  return true;
}

bool is_k_strong_in(const MixedGraph& m, std::span<const VertexId> s, int k) {
  for (VertexId x : s) {
    for (VertexId y : s) {
      if (x == y) continue;
      require_distinct(m, x, y);
      if (vertex_paths(m, x, y, k) < k) return false;
    }
  }
  return true;
}

std::vector<int> bridges(const MixedGraph& g) {
  const int n = g.num_vertices();
  const int ne = g.num_edges();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  auto endpoints = [&](int id) {
    if (id < ne) return std::pair{g.edge(id).u, g.edge(id).v};
    const auto& a = g.arc(id - ne);
    return std::pair{a.tail, a.head};
  };
  const int total = ne + g.num_arcs();
  for (int id = 0; id < total; ++id) {
    const auto [a, b] = endpoints(id);
    adj[a].push_back({b, id});
    adj[b].push_back({a, id});
  }
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> result;
  int counter = 0;
  struct Frame {
    int vertex;
    int via;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    order[root] = low[root] = counter++;
    while (!stack.empty()) {
      auto& top = stack.back();
      if (top.next < adj[top.vertex].size()) {
        const auto [w, id] = adj[top.vertex][top.next++];
        if (id == top.via) continue;
        if (order[w] < 0) {
          order[w] = low[w] = counter++;
          stack.push_back({w, id, 0});
        } else {
          low[top.vertex] = std::min(low[top.vertex], order[w]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (!stack.empty()) {
        const int parent = stack.back().vertex;
        low[parent] = std::min(low[parent], low[done.vertex]);
        if (low[done.vertex] > order[parent]) result.push_back(done.via);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

int edge_connectivity(const MixedGraph& g) {
  if (g.num_vertices() < 2) return INT_MAX;
  auto net = arc_network(g, true);
  std::int64_t best = kInf;
  for (int v = 1; v < g.num_vertices(); ++v) {
    net.reset();
    best = std::min(best, net.run(0, v, best));
  }
  return static_cast<int>(best);
}

bool is_k_edge_connected(const MixedGraph& g, int k) {
  if (k <= 0 || g.num_vertices() < 2) return true;
  auto net = arc_network(g, true);
  for (int v = 1; v < g.num_vertices(); ++v) {
    net.reset();
    if (net.run(0, v, k) < k) return false;
  }
  return true;
}

namespace detail {

std::vector<CutSet> enumerate_cuts_by_vertex_subsets(const MixedGraph& g, int c) {
  const int n = g.num_vertices();
  if (n > 20) throw SizeError("vertex-subset cut enumeration is limited to 20 vertices");
  std::vector<CutSet> cuts;
  if (n < 2) return cuts;
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : g.edges()) ends.push_back({e.u, e.v});
  for (const auto& a : g.arcs()) ends.push_back({a.tail, a.head});
  const std::uint32_t full = (1U << n) - 1;
  // Vertex 0 is always on the reported side; masks range over the other vertices.
  for (std::uint32_t rest = 0; rest < (1U << (n - 1)); ++rest) {
    const std::uint32_t mask = (rest << 1) | 1U;
    if (mask == full) continue;
    int d = 0;
    for (const auto& [u, v] : ends) {
      if (((mask >> u) & 1U) != ((mask >> v) & 1U) && ++d > c) break;
    }
    if (d > c) continue;
    std::vector<VertexId> side;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) side.push_back(v);
    }
    cuts.push_back(cut_of(g, side));
  }
  sort_cuts(cuts);
  return cuts;
}

std::vector<CutSet> enumerate_cuts_by_edge_subsets(const MixedGraph& g, int c) {
  const int n = g.num_vertices();
  std::vector<CutSet> cuts;
  if (n < 2 || c < 0) return cuts;
  const MixedGraph ug = underlying_graph(g);
  const int m = ug.num_edges();
  constexpr double kSubsetCap = 2e7;
  double subsets = 0;
  double binom = 1;
  for (int s = 0; s <= std::min(c, m); ++s) {
    subsets += binom;
    binom = binom * (m - s) / (s + 1);
  }
  if (subsets > kSubsetCap) throw SizeError("edge-subset cut enumeration exceeds its subset budget");

  std::vector<int> chosen;
  std::vector<char> removed(static_cast<std::size_t>(m), 0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto examine = [&]() {
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < m; ++i) {
      if (removed[i]) continue;
      const int a = find(ug.edge(i).u);
      const int b = find(ug.edge(i).v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> comp_id(static_cast<std::size_t>(n), -1);
    int comps = 0;
    for (int v = 0; v < n; ++v) {
      const int r = find(v);
      if (comp_id[r] < 0) comp_id[r] = comps++;
      comp_id[v] = comp_id[r];
    }
    if (comps > 24) throw SizeError("edge-subset cut enumeration met too many components");
    // Component 0 holds vertex 0; choose the other components on its side.
    for (std::uint32_t rest = 0; rest < (1U << (comps - 1)); ++rest) {
      const std::uint32_t side_mask = (rest << 1) | 1U;
      if (side_mask == (1U << comps) - 1) continue;
      bool exact = true;
      for (int i : chosen) {
        const bool a = (side_mask >> comp_id[ug.edge(i).u]) & 1U;
        const bool b = (side_mask >> comp_id[ug.edge(i).v]) & 1U;
        if (a == b) {
          exact = false;
          break;
        }
      }
      if (!exact) continue;
      std::vector<VertexId> side;
      for (int v = 0; v < n; ++v) {
        if ((side_mask >> comp_id[v]) & 1U) side.push_back(v);
      }
      cuts.push_back(cut_of(g, side));
    }
  };
  auto recurse = [&](auto&& self, int start) -> void {
    examine();
    if (static_cast<int>(chosen.size()) == c) return;
    for (int i = start; i < m; ++i) {
      chosen.push_back(i);
      removed[i] = 1;
      self(self, i + 1);
      removed[i] = 0;
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  sort_cuts(cuts);
  return cuts;
}

bool is_k_strong_by_deletions(const MixedGraph& m, int k) {
  return BitGraph(m).k_strong(k);
}

}  // namespace detail

std::vector<CutSet> enumerate_cuts_up_to(const MixedGraph& g, int c) {
  if (g.num_vertices() <= 20) return detail::enumerate_cuts_by_vertex_subsets(g, c);
  return detail::enumerate_cuts_by_edge_subsets(g, c);
}

bool check_kstrong_orientation_condition(const MixedGraph& g, int k) {
  const int n = g.num_vertices();
  std::vector<VertexId> removed;
  auto visit = [&](auto&& self, int start) -> bool {
    const int size = static_cast<int>(removed.size());
    const MixedGraph rest = delete_vertices(g, removed).graph;
    if (!is_k_edge_connected(rest, 2 * (k - size))) return false;
    if (size + 1 >= k) return true;
    for (int v = start; v < n; ++v) {
      removed.push_back(v);
      const bool ok = self(self, v + 1);
      removed.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (k <= 0) return true;
  return visit(visit, 0);
}

namespace detail {

BitGraph::BitGraph(const MixedGraph& m)
    : n_(m.num_vertices()),
      out_(static_cast<std::size_t>(m.num_vertices()), 0),
      in_(static_cast<std::size_t>(m.num_vertices()), 0) {
  if (n_ > kMaxVertices) throw SizeError("bitset graph limited to 64 vertices");
  for (const auto& e : m.edges()) {
    add(e.u, e.v);
    add(e.v, e.u);
  }
  for (const auto& a : m.arcs()) add(a.tail, a.head);
}

BitGraph::BitGraph(int n, std::vector<std::uint64_t> out, std::vector<std::uint64_t> in)
    : n_(n), out_(std::move(out)), in_(std::move(in)) {
  if (n_ > kMaxVertices) throw SizeError("bitset graph limited to 64 vertices");
}

bool BitGraph::k_strong(int k) const {
  if (n_ <= k) return false;
  const std::uint64_t everything = all();
  return for_each_small_set(k, [&](std::uint64_t removed) { return strong(everything & ~removed); });
}

}  // namespace detail

}  // namespace reorient
