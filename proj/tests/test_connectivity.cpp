#include <climits>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "reorient/connectivity.hpp"

using namespace reorient;

TEST_CASE("local connectivities on small shapes") {
  CHECK(local_arc_connectivity(oracle::cycle(3, true), 0, 1) == 1);
  CHECK(local_edge_connectivity(oracle::cycle(4, false), 0, 2) == 2);
  MixedGraph theta(2);
  for (int i = 0; i < 3; ++i) theta.add_edge(0, 1);
  CHECK(local_edge_connectivity(theta, 0, 1) == 3);
  CHECK_THROWS_AS(local_arc_connectivity(theta, 1, 1), GraphError);
}

TEST_CASE("Menger duality against cut enumeration") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = oracle::pick(rng, 2, 8);
    MixedGraph m = oracle::random_digraph(rng, n, oracle::pick(rng, 1, 3 * n));
    for (int i = oracle::pick(rng, 0, n); i > 0; --i) {
      const int u = oracle::pick(rng, 0, n - 1);
      const int v = (u + oracle::pick(rng, 1, n - 1)) % n;
      m.add_edge(u, v);
    }
    const int x = oracle::pick(rng, 0, n - 1);
    const int y = (x + oracle::pick(rng, 1, n - 1)) % n;
    const int lam = local_arc_connectivity(m, x, y);
    CHECK(lam == oracle::lambda(m, x, y));
    const auto cut = min_cut_between(m, x, y);
    CHECK(cut.out_value() == lam);
    CHECK(std::find(cut.side.begin(), cut.side.end(), x) != cut.side.end());
    CHECK(std::find(cut.side.begin(), cut.side.end(), y) == cut.side.end());
  }
}

TEST_CASE("cut_of keeps the complement relation") {
  std::mt19937_64 rng(7);
  const auto d = oracle::random_digraph(rng, 6, 14);
  const VertexId x[] = {0, 2, 3};
  const VertexId rest[] = {1, 4, 5};
  const auto a = cut_of(d, x);
  const auto b = cut_of(d, rest);
  CHECK(a.d_plus == b.d_minus);
  CHECK(a.d_minus == b.d_plus);
}

TEST_CASE("arc-strong examples") {
  CHECK(is_k_arc_strong(oracle::complete(3, true), 2));
  CHECK_FALSE(is_k_arc_strong(oracle::cycle(4, true), 2));
  std::mt19937_64 rng(31);
  int positives = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = oracle::pick(rng, 2, 7);
    const auto g = oracle::random_graph(rng, n, oracle::pick(rng, n, 4 * n));
    const int k = oracle::pick(rng, 1, 3);
    const auto d = edge_to_digon(g);
    CHECK(is_k_arc_strong(d, k) == oracle::k_arc_strong(d, k));
    if (oracle::edge_connectivity(g) >= 2 * k) {
      CHECK(is_k_arc_strong(d, k));
      ++positives;
    }
  }
  CHECK(positives > 10);
}

TEST_CASE("arc-strong test agrees with subset enumeration on mixed graphs") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = oracle::pick(rng, 2, 8);
    MixedGraph m = oracle::random_digraph(rng, n, oracle::pick(rng, n, 4 * n));
    for (int i = 0; i < n; ++i) {
      const int u = oracle::pick(rng, 0, n - 1);
      m.add_edge(u, (u + oracle::pick(rng, 1, n - 1)) % n);
    }
    for (int k = 1; k <= 3; ++k) CHECK(is_k_arc_strong(m, k) == oracle::k_arc_strong(m, k));
  }
}

TEST_CASE("vertex-strong examples and cross-checks") {
  for (int k = 1; k <= 4; ++k) {
    CHECK(is_k_strong(oracle::complete(k + 1, true), k));
    CHECK_FALSE(is_k_strong(oracle::complete(k, true), k));
  }
  CHECK_FALSE(is_k_strong(oracle::cycle(5, true), 2));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = oracle::pick(rng, 2, 8);
    MixedGraph m = oracle::random_digraph(rng, n, oracle::pick(rng, n, 5 * n));
    for (int i = oracle::pick(rng, 0, n); i > 0; --i) {
      const int u = oracle::pick(rng, 0, n - 1);
      m.add_edge(u, (u + oracle::pick(rng, 1, n - 1)) % n);
    }
    for (int k = 1; k <= 3; ++k) {
      const bool strong = is_k_strong(m, k);
      CHECK(strong == oracle::k_strong(m, k));
      CHECK(strong == detail::is_k_strong_by_deletions(m, k));
      if (strong) CHECK(is_k_arc_strong(m, k));
    }
  }
}

TEST_CASE("k-strong in a vertex subset") {
  const auto k4 = oracle::complete(4, true);
  const VertexId all[] = {0, 1, 2, 3};
  CHECK(is_k_strong_in(k4, all, 3));
  CHECK_FALSE(is_k_strong_in(k4, all, 4));
  // Two vertices joined through two private middles plus a direct arc.
  MixedGraph m(4);
  m.add_arc(0, 2);
  m.add_arc(2, 1);
  m.add_arc(0, 3);
  m.add_arc(3, 1);
  m.add_arc(0, 1);
  m.add_arc(1, 0);
  const VertexId pair[] = {0, 1};
  CHECK(local_vertex_connectivity(m, 0, 1) == 3);
  CHECK(local_vertex_connectivity(m, 1, 0) == 1);
  CHECK_FALSE(is_k_strong_in(m, pair, 2));
}

TEST_CASE("bridges and edge connectivity") {
  MixedGraph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  CHECK(bridges(path) == std::vector<int>{0, 1, 2});
  CHECK(bridges(oracle::cycle(5, false)).empty());
  MixedGraph twin(2);
  twin.add_edge(0, 1);
  twin.add_edge(0, 1);
  CHECK(bridges(twin).empty());
  CHECK(edge_connectivity(MixedGraph(1)) == INT_MAX);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = oracle::pick(rng, 2, 8);
    const auto g = oracle::random_graph(rng, n, oracle::pick(rng, 1, 3 * n));
    CHECK(static_cast<int>(bridges(g).size()) == oracle::count_bridges(g));
    CHECK(edge_connectivity(g) == oracle::edge_connectivity(g));
  }
}

TEST_CASE("cut enumeration") {
  // C4 has six bipartitions with two crossing edges and none smaller.
  const auto c4 = oracle::cycle(4, false);
  const auto cuts = enumerate_cuts_up_to(c4, 2);
  CHECK(cuts.size() == 6);
  for (const auto& c : cuts) {
    CHECK(c.d == 2);
    CHECK(c.side.front() == 0);
  }
  CHECK(enumerate_cuts_up_to(c4, 1).empty());

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = oracle::pick(rng, 2, 8);
    const auto g = oracle::random_graph(rng, n, oracle::pick(rng, n, 3 * n));
    const int c = oracle::pick(rng, 0, 4);
    const auto by_vertices = detail::enumerate_cuts_by_vertex_subsets(g, c);
    const auto by_edges = detail::enumerate_cuts_by_edge_subsets(g, c);
    REQUIRE(by_vertices.size() == by_edges.size());
    for (std::size_t i = 0; i < by_vertices.size(); ++i) {
      CHECK(by_vertices[i].side == by_edges[i].side);
      CHECK(by_vertices[i].d == by_edges[i].d);
    }
    std::size_t expected = 0;
    for (std::uint64_t x = 1; x + 1 < (1ULL << n); x += 2) {
      int d = 0;
      for (const auto& e : g.edges()) d += ((x >> e.u) & 1U) != ((x >> e.v) & 1U);
      expected += d <= c;
    }
    CHECK(by_vertices.size() == expected);
  }
}

TEST_CASE("orientation condition checker") {
  CHECK(check_kstrong_orientation_condition(oracle::complete(6, false), 2));
  CHECK_FALSE(check_kstrong_orientation_condition(oracle::cycle(4, false), 2));
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = oracle::pick(rng, 2, 7);
    const auto g = oracle::random_graph(rng, n, oracle::pick(rng, n - 1, 3 * n));
    CHECK(check_kstrong_orientation_condition(g, 1) == (oracle::edge_connectivity(g) >= 2));
    bool direct = oracle::edge_connectivity(g) >= 4;
    for (int v = 0; v < n && direct; ++v) {
      const VertexId gone[] = {v};
      direct = oracle::edge_connectivity(delete_vertices(g, gone).graph) >= 2;
    }
    CHECK(check_kstrong_orientation_condition(g, 2) == direct);
  }
}
