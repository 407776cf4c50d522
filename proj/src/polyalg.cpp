#include "reorient/polyalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "reorient/detail/matroid.hpp"
#include "reorient/flow.hpp"

namespace reorient {

namespace {

void require_graph(const MixedGraph& g, const char* who) {
  if (!g.is_graph()) throw GraphError(std::string(who) + " expects an undirected graph");
}

void require_digraph(const MixedGraph& d, const char* who) {
  if (!d.is_digraph()) throw GraphError(std::string(who) + " expects a digraph");
}

std::vector<Rational> checked_weights(const std::vector<Rational>& weights, int count) {
  if (weights.empty()) return std::vector<Rational>(static_cast<std::size_t>(count), Rational(1));
  if (static_cast<int>(weights.size()) != count) throw std::invalid_argument("one weight per element expected");
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("weights must be non-negative");
  }
  return weights;
}

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

RobbinsResult robbins_partial_orientation(const MixedGraph& g, int k) {
  require_graph(g, "robbins_partial_orientation");
  RobbinsResult result;
  result.orientation.source = g;
  result.orientation.decisions.assign(static_cast<std::size_t>(g.num_edges()), EdgeChoice::keep);
  if (edge_connectivity(g) < 1) return result;

  const int m = g.num_edges();
  std::vector<char> is_bridge(static_cast<std::size_t>(m), 0);
  for (int b : bridges(g)) is_bridge[b] = 1;
  result.bound = m - static_cast<int>(std::count(is_bridge.begin(), is_bridge.end(), 1));
  if (k < 0 || k > result.bound) return result;

  // Depth-first orientation: tree edges point away from the root, the rest point upwards.
  const int n = g.num_vertices();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    adj[g.edge(i).u].push_back({g.edge(i).v, i});
    adj[g.edge(i).v].push_back({g.edge(i).u, i});
  }
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  std::vector<EdgeChoice> dir(static_cast<std::size_t>(m), EdgeChoice::keep);
  auto point = [&](int e, VertexId from) {
    dir[e] = g.edge(e).u == from ? EdgeChoice::forward : EdgeChoice::backward;
  };
  int clock = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (order[root] >= 0) continue;
    std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
    order[root] = clock++;
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      if (next == adj[x].size()) {
        stack.pop_back();
        continue;
      }
      const auto [y, e] = adj[x][next++];
      if (used[e]) continue;
      used[e] = 1;
      if (order[y] < 0) {
        point(e, x);
        order[y] = clock++;
        stack.push_back({y, 0});
      } else {
        point(e, order[x] > order[y] ? x : y);
      }
    }
  }
  int oriented = 0;
  for (int i = 0; i < m && oriented < k; ++i) {
    if (is_bridge[i]) continue;
    result.orientation.decisions[i] = dir[i];
    ++oriented;
  }
  result.feasible = true;
  return result;
}

CactusQuotient cactus_quotient(const MixedGraph& g) {
  require_graph(g, "cactus_quotient");
  const int n = g.num_vertices();
  CactusQuotient q;
  q.class_of.assign(static_cast<std::size_t>(n), -1);
  int classes = 0;
  for (VertexId u = 0; u < n; ++u) {
    if (q.class_of[u] >= 0) continue;
    q.class_of[u] = classes;
    for (VertexId v = u + 1; v < n; ++v) {
      if (q.class_of[v] < 0 && local_edge_connectivity(g, u, v) >= 3) q.class_of[v] = classes;
    }
    ++classes;
  }
  q.quotient = MixedGraph(classes);
  for (int i = 0; i < g.num_edges(); ++i) {
    const int a = q.class_of[g.edge(i).u];
    const int b = q.class_of[g.edge(i).v];
    if (a == b) continue;
    q.quotient.add_edge(a, b, g.edge(i).label);
    q.edge_origin.push_back(i);
  }
  return q;
}

bool is_cactus(const MixedGraph& g) {
  require_graph(g, "is_cactus");
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v = u + 1; v < g.num_vertices(); ++v) {
      if (local_edge_connectivity(g, u, v) != 2) return false;
    }
  }
  return true;
}

SolveResult w23eda(const MixedGraph& g, const std::vector<Rational>& weights) {
  require_graph(g, "w23eda");
  const auto w = checked_weights(weights, g.num_edges());
  if (!is_k_edge_connected(g, 2)) return {};
  const auto q = cactus_quotient(g);
  std::vector<int> order(q.edge_origin.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const int ea = q.edge_origin[a];
    const int eb = q.edge_origin[b];
    return w[ea] != w[eb] ? w[ea] < w[eb] : ea < eb;
  });
  DisjointSets sets(q.quotient.num_vertices());
  SolveResult result;
  result.feasible = true;
  for (int i : order) {
    if (!sets.unite(q.quotient.edge(i).u, q.quotient.edge(i).v)) continue;
    result.witness.push_back(q.edge_origin[i]);
    result.optimum += w[q.edge_origin[i]];
  }
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

SolveResult degree_deorientation(const MixedGraph& d, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = d.num_vertices();
  // Nodes: v1 = v, v2 = n + v, s = 2n, t = 2n + 1.
  const int s = 2 * n;
  const int t = 2 * n + 1;
  FlowNetwork net(2 * n + 2, s, t);
  const std::int64_t big = static_cast<std::int64_t>(k) * n;
  for (VertexId v = 0; v < n; ++v) {
    net.add_arc(s, v, big, 0, k);
    net.add_arc(n + v, t, big, 0, k);
  }
  for (const auto& e : d.edges()) {
    net.add_arc(e.u, n + e.v, 1);
    net.add_arc(e.v, n + e.u, 1);
  }
  std::vector<int> deorient_copy(static_cast<std::size_t>(d.num_arcs()));
  for (int i = 0; i < d.num_arcs(); ++i) {
    const auto& a = d.arc(i);
    net.add_arc(a.tail, n + a.head, 1);
    deorient_copy[i] = net.add_arc(a.head, n + a.tail, 1, Rational(1));
  }
  const auto flow = min_cost_feasible_flow(net);
  SolveResult result;
  if (!flow.feasible) return result;
  result.feasible = true;
  result.optimum = flow.cost;
  for (int i = 0; i < d.num_arcs(); ++i) {
    if (flow.flow[deorient_copy[i]] > 0) result.witness.push_back(i);
  }
  return result;
}

namespace {

/// Rooted k-arc-connectivity from `root` using only the flagged arcs.
bool rooted_connected(int n, const std::vector<std::pair<int, int>>& ends, const std::vector<char>& keep,
                      VertexId root, int k) {
  if (k <= 0) return true;
  MixedGraph h(n);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (keep[i]) h.add_arc(ends[i].first, ends[i].second);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (v != root && local_arc_connectivity(h, root, v) < k) return false;
  }
  return true;
}

/// Split an arc set with in-degree k at every non-root vertex and rooted k-arc-connectivity
/// into k spanning out-branchings, growing one branching at a time so that the rest keeps
/// rooted connectivity one lower.
std::vector<std::vector<int>> split_branchings(int n, const std::vector<std::pair<int, int>>& ends,
                                               std::vector<char> remaining, VertexId root, int k) {
  std::vector<std::vector<int>> out;
  for (int level = k; level >= 1; --level) {
    std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
    in_tree[root] = 1;
    std::vector<int> tree;
    while (static_cast<int>(tree.size()) < n - 1) {
      bool grown = false;
      for (std::size_t a = 0; a < ends.size() && !grown; ++a) {
        if (!remaining[a] || !in_tree[ends[a].first] || in_tree[ends[a].second]) continue;
        remaining[a] = 0;
        if (rooted_connected(n, ends, remaining, root, level - 1)) {
          tree.push_back(static_cast<int>(a));
          in_tree[ends[a].second] = 1;
          grown = true;
        } else {
          remaining[a] = 1;
        }
      }
      if (!grown) throw std::logic_error("branching decomposition got stuck");
    }
    std::sort(tree.begin(), tree.end());
    out.push_back(std::move(tree));
  }
  return out;
}

}  // namespace

PackingResult min_weight_branching_packing(const MixedGraph& d, int k, VertexId root,
                                           const std::vector<Rational>& weights, BranchingDirection direction) {
  require_digraph(d, "min_weight_branching_packing");
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (!d.valid_vertex(root)) throw GraphError("root out of range");
  const int n = d.num_vertices();
  const int m = d.num_arcs();
  const auto w = checked_weights(weights, m);
  const bool out_dir = direction == BranchingDirection::out;

  PackingResult result;
  result.packing.root = root;
  result.packing.direction = direction;

  // Work on out-branchings; in-branchings are out-branchings of the reverse digraph.
  std::vector<std::pair<int, int>> ends(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& a = d.arc(i);
    ends[i] = out_dir ? std::pair{a.tail, a.head} : std::pair{a.head, a.tail};
  }
  // Branchings out of the root exist iff every root-free set has k entering arcs; look for a
  // minimal violator from the sink side, scanning vertices from the highest index down.
  MixedGraph toward_root(n);
  for (const auto& [t, h] : ends) toward_root.add_arc(h, t);
  for (VertexId v = n - 1; v >= 0; --v) {
    if (v == root || local_arc_connectivity(toward_root, v, root) >= k) continue;
    result.violated_cut = cut_of(d, min_cut_between(toward_root, v, root).side);
    return result;
  }

  result.feasible = true;
  if (k == 0 || n <= 1) {
    result.packing.branchings.assign(static_cast<std::size_t>(k), {});
    return result;
  }

  // Ground set: arcs not entering the root.
  std::vector<int> ground;
  for (int i = 0; i < m; ++i) {
    if (ends[i].second != root) ground.push_back(i);
  }
  std::vector<std::pair<int, int>> ground_ends;
  std::vector<int> heads;
  std::vector<Rational> ground_w;
  for (int i : ground) {
    ground_ends.push_back(ends[i]);
    heads.push_back(ends[i].second);
    ground_w.push_back(w[i]);
  }
  detail::ForestUnionOracle forests(n, k, ground_ends);
  std::vector<int> cap(static_cast<std::size_t>(n), k);
  cap[root] = 0;
  detail::PartitionOracle indegree(heads, cap);
  const auto chosen = detail::min_weight_common_independent(static_cast<int>(ground.size()), ground_w, forests,
                                                            indegree, k * (n - 1));
  if (!chosen) throw std::logic_error("branching packing missing despite rooted connectivity");

  std::vector<char> keep(static_cast<std::size_t>(m), 0);
  for (int g : *chosen) {
    keep[ground[g]] = 1;
    result.weight += w[ground[g]];
  }
  result.packing.branchings = split_branchings(n, ends, keep, root, k);
  return result;
}

DeorientationApprox deor_k_arc_2approx(const MixedGraph& d, int k, VertexId root) {
  require_digraph(d, "deor_k_arc_2approx");
  const int m = d.num_arcs();
  MixedGraph doubled = d;
  std::vector<Rational> w(static_cast<std::size_t>(2 * m), Rational(0));
  for (int i = 0; i < m; ++i) {
    doubled.add_arc(d.arc(i).head, d.arc(i).tail);
    w[m + i] = 1;
  }
  DeorientationApprox result;
  result.out_packing = min_weight_branching_packing(doubled, k, root, w, BranchingDirection::out);
  result.in_packing = min_weight_branching_packing(doubled, k, root, w, BranchingDirection::in);
  if (!result.out_packing.feasible || !result.in_packing.feasible) return result;
  std::vector<char> pick(static_cast<std::size_t>(m), 0);
  for (const auto* p : {&result.out_packing, &result.in_packing}) {
    for (const auto& b : p->packing.branchings) {
      for (int a : b) {
        if (a >= m) pick[a - m] = 1;
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    if (pick[i]) result.arcs.push_back(i);
  }
  result.feasible = true;
  return result;
}

std::vector<int> exact_augmentation_plug(const MixedGraph& g, const std::vector<int>& candidates) {
  SearchOptions options;
  std::vector<char> allowed(static_cast<std::size_t>(g.num_edges()), 0);
  for (int c : candidates) allowed.at(static_cast<std::size_t>(c)) = 1;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (!allowed[i]) options.forbidden.push_back(i);
  }
  const auto r = min_doubling(g, DoublingTarget{4, false}, {}, options);
  return r.feasible ? r.witness : std::vector<int>{};
}

DoublingApprox m4eda_approx(const MixedGraph& g, const AugmentationPlug& inner) {
  require_graph(g, "m4eda_approx");
  DoublingApprox result;
  if (!is_k_edge_connected(g, 2)) return result;
  const int m = g.num_edges();
  std::vector<int> candidates;
  for (int i = 0; i < m; ++i) {
    MixedGraph h(g.num_vertices());
    for (int j = 0; j < m; ++j) {
      if (j != i) h.add_edge(g.edge(j).u, g.edge(j).v);
    }
    if (bridges(h).empty()) {
      candidates.push_back(i);
    } else {
      result.forced.push_back(i);
    }
  }
  const MixedGraph g_prime = double_edges(g, result.forced);
  auto chosen = inner(g_prime, candidates);
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (int c : chosen) {
    if (!std::binary_search(candidates.begin(), candidates.end(), c)) {
      throw std::invalid_argument("augmentation plug returned a non-candidate edge");
    }
  }
  result.chosen = chosen;
  result.doubled = result.forced;
  result.doubled.insert(result.doubled.end(), chosen.begin(), chosen.end());
  std::sort(result.doubled.begin(), result.doubled.end());
  result.feasible = is_k_edge_connected(double_edges(g, result.doubled), 4);
  return result;
}

}  // namespace reorient
