// Brute-force reference implementations used as test oracles. They rely only on the
// MixedGraph container and plain graph search, never on the library's algorithms.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "reorient/graph.hpp"
#include "reorient/rational.hpp"

namespace oracle {

using reorient::MixedGraph;

/// Uniform integer in [lo, hi] that does not depend on the standard library's distributions.
inline int pick(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

inline int cut_out_value(const MixedGraph& m, std::uint64_t x) {
  int value = 0;
  for (const auto& e : m.edges()) value += ((x >> e.u) & 1U) != ((x >> e.v) & 1U);
  for (const auto& a : m.arcs()) value += ((x >> a.tail) & 1U) && !((x >> a.head) & 1U);
  return value;
}

inline bool k_arc_strong(const MixedGraph& m, int k) {
  const int n = m.num_vertices();
  for (std::uint64_t x = 1; x + 1 < (1ULL << n); ++x) {
    if (cut_out_value(m, x) < k) return false;
  }
  return true;
}

inline int edge_connectivity(const MixedGraph& g) {
  const int n = g.num_vertices();
  if (n < 2) return 1 << 20;
  int best = 1 << 20;
  for (std::uint64_t x = 1; x + 1 < (1ULL << n); x += 2) {
    int d = 0;
    for (const auto& e : g.edges()) d += ((x >> e.u) & 1U) != ((x >> e.v) & 1U);
    for (const auto& a : g.arcs()) d += ((x >> a.tail) & 1U) != ((x >> a.head) & 1U);
    best = std::min(best, d);
  }
  return best;
}

/// Reachability inside the vertex set `alive` (edges usable both ways).
inline std::uint64_t reach(const MixedGraph& m, int root, std::uint64_t alive, bool backwards) {
  std::uint64_t seen = 1ULL << root;
  bool grew = true;
  while (grew) {
    grew = false;
    auto step = [&](int from, int to) {
      if (((seen >> from) & 1U) && ((alive >> to) & 1U) && !((seen >> to) & 1U)) {
        seen |= 1ULL << to;
        grew = true;
      }
    };
    for (const auto& e : m.edges()) {
      step(e.u, e.v);
      step(e.v, e.u);
    }
    for (const auto& a : m.arcs()) {
      if (backwards) {
        step(a.head, a.tail);
      } else {
        step(a.tail, a.head);
      }
    }
  }
  return seen;
}

inline bool strong_on(const MixedGraph& m, std::uint64_t alive) {
  if (alive == 0) return true;
  int root = 0;
  while (!((alive >> root) & 1U)) ++root;
  return reach(m, root, alive, false) == alive && reach(m, root, alive, true) == alive;
}

inline bool k_strong(const MixedGraph& m, int k) {
  const int n = m.num_vertices();
  if (n <= k) return false;
  const std::uint64_t all = (1ULL << n) - 1;
  for (std::uint64_t x = 0; x <= all; ++x) {
    if (std::popcount(x) < k && !strong_on(m, all & ~x)) return false;
  }
  return true;
}

inline bool connected(const MixedGraph& g) {
  if (g.num_vertices() == 0) return true;
  const std::uint64_t all = (1ULL << g.num_vertices()) - 1;
  return reach(underlying_graph(g), 0, all, false) == all;
}

inline int components(const MixedGraph& g) {
  const std::uint64_t all = (1ULL << g.num_vertices()) - 1;
  const MixedGraph ug = underlying_graph(g);
  std::uint64_t left = all;
  int count = 0;
  while (left) {
    left &= ~reach(ug, std::countr_zero(left), all, false);
    ++count;
  }
  return count;
}

inline int count_bridges(const MixedGraph& g) {
  const int base = components(g);
  int b = 0;
  for (int i = 0; i < g.num_edges(); ++i) {
    MixedGraph h(g.num_vertices());
    for (int j = 0; j < g.num_edges(); ++j) {
      if (j != i) h.add_edge(g.edge(j).u, g.edge(j).v);
    }
    b += components(h) > base;
  }
  return b;
}

/// Local arc connectivity by enumerating all separating sets.
inline int lambda(const MixedGraph& m, int x, int y) {
  const int n = m.num_vertices();
  int best = 1 << 20;
  for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
    if (((s >> x) & 1U) && !((s >> y) & 1U)) best = std::min(best, cut_out_value(m, s));
  }
  return best;
}

/// Smallest subset (by size, then by the order of enumeration) satisfying `ok`.
inline std::optional<std::vector<int>> min_subset(int m, const std::function<bool(const std::vector<int>&)>& ok,
                                                  int max_size = -1) {
  if (max_size < 0) max_size = m;
  std::vector<int> chosen;
  for (int size = 0; size <= max_size; ++size) {
    std::optional<std::vector<int>> found;
    std::function<bool(int)> rec = [&](int start) {
      if (static_cast<int>(chosen.size()) == size) {
        if (ok(chosen)) {
          found = chosen;
          return true;
        }
        return false;
      }
      for (int i = start; i < m; ++i) {
        chosen.push_back(i);
        if (rec(i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (rec(0)) return found;
  }
  return std::nullopt;
}

/// Minimum total weight subset satisfying `ok` (exhaustive over all 2^m subsets).
inline std::optional<reorient::Rational> min_weight_subset(int m, const std::vector<reorient::Rational>& w,
                                                           const std::function<bool(const std::vector<int>&)>& ok) {
  std::optional<reorient::Rational> best;
  for (std::uint64_t s = 0; s < (1ULL << m); ++s) {
    std::vector<int> chosen;
    reorient::Rational cost = 0;
    for (int i = 0; i < m; ++i) {
      if ((s >> i) & 1U) {
        chosen.push_back(i);
        cost += w[i];
      }
    }
    if (best && cost >= *best) continue;
    if (ok(chosen)) best = cost;
  }
  return best;
}

/// Every way to orient or keep each edge: calls fn(mixed graph, number kept).
inline void for_each_partial_orientation(const MixedGraph& g, bool allow_keep,
                                         const std::function<void(const MixedGraph&, int)>& fn) {
  const int m = g.num_edges();
  const int base = allow_keep ? 3 : 2;
  std::vector<int> choice(static_cast<std::size_t>(m), 0);
  while (true) {
    MixedGraph h(g.num_vertices());
    int kept = 0;
    for (int i = 0; i < m; ++i) {
      const auto& e = g.edge(i);
      if (choice[i] == 0) h.add_arc(e.u, e.v);
      if (choice[i] == 1) h.add_arc(e.v, e.u);
      if (choice[i] == 2) {
        h.add_edge(e.u, e.v);
        ++kept;
      }
    }
    fn(h, kept);
    int i = 0;
    while (i < m && ++choice[i] == base) choice[i++] = 0;
    if (i == m) break;
  }
}

/// Canonical form of an undirected multigraph under vertex permutations (small n only).
inline std::vector<std::pair<int, int>> canonical_edges(const MixedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool first = true;
  do {
    std::vector<std::pair<int, int>> e;
    for (const auto& ed : g.edges()) {
      const int a = perm[ed.u];
      const int b = perm[ed.v];
      e.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(e.begin(), e.end());
    if (first || e < best) {
      best = e;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// All undirected multigraphs on n vertices with exactly m edges, up to isomorphism.
inline std::vector<MixedGraph> multigraphs_up_to_iso(int n, int m, int max_multiplicity = 1 << 20) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
  }
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<MixedGraph> out;
  std::vector<int> taken;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(taken.size()) == m) {
      MixedGraph g(n);
      for (int p : taken) g.add_edge(pairs[p].first, pairs[p].second);
      if (seen.insert(canonical_edges(g)).second) out.push_back(g);
      return;
    }
    for (int p = start; p < static_cast<int>(pairs.size()); ++p) {
      const int mult = static_cast<int>(std::count(taken.begin(), taken.end(), p));
      if (mult >= max_multiplicity) continue;
      taken.push_back(p);
      rec(p);
      taken.pop_back();
    }
  };
  rec(0);
  return out;
}

inline MixedGraph random_graph(std::mt19937_64& rng, int n, int m) {
  MixedGraph g(n);
  for (int i = 0; i < m; ++i) {
    const int u = pick(rng, 0, n - 1);
    int v = pick(rng, 0, n - 2);
    if (v >= u) ++v;
    g.add_edge(u, v);
  }
  return g;
}

inline MixedGraph random_digraph(std::mt19937_64& rng, int n, int m) {
  MixedGraph d(n);
  for (int i = 0; i < m; ++i) {
    const int u = pick(rng, 0, n - 1);
    int v = pick(rng, 0, n - 2);
    if (v >= u) ++v;
    d.add_arc(u, v);
  }
  return d;
}

inline MixedGraph cycle(int n, bool directed) {
  MixedGraph g(n);
  for (int i = 0; i < n; ++i) {
    if (directed) {
      g.add_arc(i, (i + 1) % n);
    } else {
      g.add_edge(i, (i + 1) % n);
    }
  }
  return g;
}

inline MixedGraph complete(int n, bool directed) {
  MixedGraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (directed) {
        g.add_arc(a, b);
        g.add_arc(b, a);
      } else {
        g.add_edge(a, b);
      }
    }
  }
  return g;
}

}  // namespace oracle
