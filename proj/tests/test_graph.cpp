#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "reorient/connectivity.hpp"
#include "reorient/graph.hpp"

using namespace reorient;

TEST_CASE("loops and dangling endpoints are rejected") {
  MixedGraph g(3);
  CHECK_THROWS_AS(g.add_arc(1, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 0), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
  CHECK_THROWS_AS(g.add_arc(-1, 2), GraphError);
}

TEST_CASE("parallel elements are kept as distinct entries") {
  MixedGraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  CHECK(g.num_edges() == 2);
}

TEST_CASE("deleting a vertex of a triangle") {
  const auto k3 = oracle::complete(3, false);
  const VertexId gone[] = {0};
  const auto res = delete_vertices(k3, gone);
  CHECK(res.graph.num_vertices() == 2);
  CHECK(res.graph.num_edges() == 1);
  CHECK(res.old_to_new == std::vector<VertexId>{-1, 0, 1});
}

TEST_CASE("reversal is an involution and keeps a cycle strong") {
  const auto c3 = oracle::cycle(3, true);
  const int all[] = {0, 1, 2};
  const auto r = reverse_arcs(c3, all);
  CHECK(is_strong(r));
  CHECK(r.arc(0).tail == 1);
  CHECK(reverse_arcs(r, all) == c3);
  CHECK(reverse_arcs(c3, {}) == c3);
  const int bad[] = {3};
  CHECK_THROWS_AS(reverse_arcs(c3, bad), GraphError);
  const int twice[] = {1, 1};
  CHECK_THROWS_AS(reverse_arcs(c3, twice), GraphError);
}

TEST_CASE("deorientation replaces arcs by edges") {
  MixedGraph d(2);
  d.add_arc(0, 1);
  const int first[] = {0};
  const auto m = deorient_arcs(d, first);
  CHECK(m.num_arcs() == 0);
  CHECK(m.num_edges() == 1);
  CHECK(deorient_arcs(d, {}) == d);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = oracle::random_digraph(rng, 5, 8);
    std::vector<int> all(8);
    for (int i = 0; i < 8; ++i) all[i] = i;
    CHECK(deorient_arcs(r, all) == underlying_graph(r));
  }
}

TEST_CASE("deorienting and adding opposite arcs give the same cut values") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = oracle::random_digraph(rng, 5, 9);
    std::vector<int> f;
    for (int i = 0; i < 9; ++i) {
      if (oracle::pick(rng, 0, 1)) f.push_back(i);
    }
    const auto a = deorient_arcs(d, f);
    const auto b = add_opposite_arcs(d, f);
    for (std::uint64_t x = 1; x + 1 < 32; ++x) CHECK(oracle::cut_out_value(a, x) == oracle::cut_out_value(b, x));
  }
}

TEST_CASE("digon conversion") {
  MixedGraph e(2);
  e.add_edge(0, 1);
  const auto d = edge_to_digon(e);
  CHECK(d.num_arcs() == 2);
  CHECK(d.arc(0).tail == 0);
  CHECK(d.arc(1).tail == 1);
  CHECK(digon_to_edge(d) == e);

  // Pairing one opposite pair leaves the surplus direction as an arc.
  MixedGraph three(2);
  three.add_arc(0, 1);
  three.add_arc(1, 0);
  three.add_arc(0, 1);
  const auto m = digon_to_edge(three);
  CHECK(m.num_edges() == 1);
  CHECK(m.num_arcs() == 1);
  CHECK(m.arc(0).tail == 0);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 5, 7);
    CHECK(digon_to_edge(edge_to_digon(g)) == g);
  }
}

TEST_CASE("digon replacement preserves arc- and vertex-connectivity levels") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = oracle::pick(rng, 3, 8);
    auto d = oracle::random_digraph(rng, n, oracle::pick(rng, n, 3 * n));
    // Plant some digons.
    for (int i = 0, a = d.num_arcs(); i < a; i += 3) d.add_arc(d.arc(i).head, d.arc(i).tail);
    const auto m = digon_to_edge(d);
    for (int k = 1; k <= 3; ++k) {
      CHECK(is_k_arc_strong(d, k) == is_k_arc_strong(m, k));
      CHECK(is_k_strong(d, k) == is_k_strong(m, k));
    }
  }
}

TEST_CASE("doubling, contraction and subdivision counts") {
  const auto c4 = oracle::cycle(4, false);
  const int one[] = {2};
  CHECK(double_edges(c4, one).num_edges() == 5);

  const auto k4 = oracle::complete(4, false);
  const auto s = subdivide_all(k4, 2);
  CHECK(s.num_vertices() == 16);
  CHECK(s.num_edges() == 18);

  const auto tri = oracle::complete(3, false);
  const VertexId ab[] = {0, 1};
  const auto c = contract(tri, ab);
  CHECK(c.graph.num_vertices() == 2);
  CHECK(c.graph.num_edges() == 2);
}

TEST_CASE("deleting vertices keeps untouched elements") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::random_digraph(rng, 6, 12);
    const VertexId gone[] = {2, 4};
    const auto res = delete_vertices(g, gone);
    int untouched = 0;
    for (const auto& a : g.arcs()) untouched += (a.tail != 2 && a.tail != 4 && a.head != 2 && a.head != 4);
    CHECK(res.graph.num_arcs() == untouched);
    MixedGraph again = res.graph;
    again.add_vertices(2);
    CHECK(again.num_arcs() == untouched);
  }
}

TEST_CASE("partial orientation realisation") {
  const auto c4 = oracle::cycle(4, false);
  PartialOrientation p{c4, {EdgeChoice::forward, EdgeChoice::keep, EdgeChoice::backward, EdgeChoice::keep}};
  const auto m = p.realize();
  CHECK(m.num_edges() == 2);
  CHECK(m.num_arcs() == 2);
  CHECK(p.oriented_count() == 2);
  CHECK(m.arc(1).tail == 3);
  CHECK(m.num_edges() + m.num_arcs() == c4.num_edges());
}
