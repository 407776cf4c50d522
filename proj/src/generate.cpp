#include "reorient/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace reorient {

namespace {

int below(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

template <class T>
void shuffle_in_place(std::vector<T>& v, std::mt19937_64& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(rng, i + 1)]);
}

}  // namespace

MixedGraph random_digraph(int n, int m, std::uint64_t seed) {
  if (n < 2 && m > 0) throw std::invalid_argument("arcs need at least two vertices");
  if (n < 0 || m < 0) throw std::invalid_argument("counts must be non-negative");
  std::mt19937_64 rng(seed);
  MixedGraph d(n);
  for (int i = 0; i < m; ++i) {
    const int u = below(rng, n);
    int v = below(rng, n - 1);
    if (v >= u) ++v;
    d.add_arc(u, v);
  }
  return d;
}

MixedGraph random_cactus(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("a cactus needs at least one vertex");
  std::mt19937_64 rng(seed);
  MixedGraph g(1);
  while (g.num_vertices() < n) {
    const int room = n - g.num_vertices();
    const int fresh = 1 + below(rng, std::min(room, 4));
    const VertexId anchor = below(rng, g.num_vertices());
    VertexId prev = anchor;
    for (int i = 0; i < fresh; ++i) {
      const VertexId v = g.add_vertex();
      g.add_edge(prev, v);
      prev = v;
    }
    g.add_edge(prev, anchor);
  }
  return g;
}

SatInstance random_s3b_sat(int num_vars, std::uint64_t seed) {
  if (num_vars < 2 || num_vars % 2 != 0) throw std::invalid_argument("variable count must be even and positive");
  std::mt19937_64 rng(seed);
  std::vector<Literal> slots;
  for (int x = 0; x < num_vars; ++x) {
    slots.push_back({x, false});
    slots.push_back({x, false});
    slots.push_back({x, true});
  }
  while (true) {
    shuffle_in_place(slots, rng);
    bool ok = true;
    for (std::size_t i = 0; i < slots.size(); i += 2) ok = ok && slots[i].var != slots[i + 1].var;
    if (!ok) continue;
    SatInstance sat;
    sat.num_vars = num_vars;
    for (std::size_t i = 0; i < slots.size(); i += 2) sat.clauses.push_back({slots[i], slots[i + 1]});
    return sat;
  }
}

}  // namespace reorient
