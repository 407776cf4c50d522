#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "reorient/connectivity.hpp"
#include "reorient/exact.hpp"

using namespace reorient;

namespace {

MixedGraph directed_path(int n) {
  MixedGraph d(n);
  for (int i = 0; i + 1 < n; ++i) d.add_arc(i, i + 1);
  return d;
}

std::vector<EdgeChoice> choices(const SolveResult& r) {
  std::vector<EdgeChoice> out;
  for (int c : r.witness) out.push_back(static_cast<EdgeChoice>(c));
  return out;
}

}  // namespace

TEST_CASE("reversal examples") {
  const auto k4 = oracle::complete(4, true);
  const auto r = min_reversals(k4, ConnectivityTarget::strong(2));
  CHECK(r.feasible);
  CHECK(r.optimum == Rational(0));
  CHECK(min_reversals(oracle::cycle(4, true), ConnectivityTarget::arc(1)).optimum == Rational(0));
  // A transitive triangle needs one reversal to become strong.
  MixedGraph t(3);
  t.add_arc(0, 1);
  t.add_arc(1, 2);
  t.add_arc(0, 2);
  const auto s = min_reversals(t, ConnectivityTarget::arc(1));
  CHECK(s.optimum == Rational(1));
  CHECK(is_strong(reverse_arcs(t, s.witness)));
  // No orientation of a triangle is 2-strong.
  CHECK_FALSE(min_reversals(t, ConnectivityTarget::strong(2)).feasible);
}

TEST_CASE("reversal optimum agrees with subset enumeration") {
  std::mt19937_64 rng(61);
  int feasible = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = oracle::pick(rng, 3, 5);
    const auto d = oracle::random_digraph(rng, n, oracle::pick(rng, 2 * n, 12));
    for (int k = 1; k <= 2; ++k) {
      const auto r = min_reversals(d, ConnectivityTarget::arc(k));
      const auto brute = oracle::min_subset(d.num_arcs(), [&](const std::vector<int>& f) {
        return oracle::k_arc_strong(reverse_arcs(d, f), k);
      });
      REQUIRE(r.feasible == brute.has_value());
      if (!brute) continue;
      ++feasible;
      CHECK(r.optimum == Rational(static_cast<long>(brute->size())));
      CHECK(oracle::k_arc_strong(reverse_arcs(d, r.witness), k));
    }
    const auto v = min_reversals(d, ConnectivityTarget::strong(2));
    const auto brute = oracle::min_subset(d.num_arcs(), [&](const std::vector<int>& f) {
      return oracle::k_strong(reverse_arcs(d, f), 2);
    });
    REQUIRE(v.feasible == brute.has_value());
    if (brute) {
      CHECK(v.optimum == Rational(static_cast<long>(brute->size())));
      CHECK(oracle::k_strong(reverse_arcs(d, v.witness), 2));
    }
  }
  CHECK(feasible > 20);
}

TEST_CASE("reversal optimum is invariant under relabelling") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = oracle::pick(rng, 3, 6);
    const auto d = oracle::random_digraph(rng, n, oracle::pick(rng, 2 * n, 3 * n));
    std::vector<VertexId> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = min_reversals(d, ConnectivityTarget::strong(2));
    const auto b = min_reversals(relabel(d, perm), ConnectivityTarget::strong(2));
    CHECK(a.feasible == b.feasible);
    CHECK(a.optimum == b.optimum);
  }
}

TEST_CASE("deorientation examples") {
  CHECK(min_deorientations(oracle::cycle(5, true), ConnectivityTarget::strong(1)).optimum == Rational(0));
  const auto p = directed_path(3);
  const auto r = min_deorientations(p, ConnectivityTarget::strong(1));
  CHECK(r.feasible);
  CHECK(r.optimum == Rational(2));
  CHECK(r.witness == std::vector<int>{0, 1});
  CHECK_FALSE(min_deorientations(p, ConnectivityTarget::arc(2)).feasible);
}

TEST_CASE("deorientation optimum agrees with subset enumeration and is monotone") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = oracle::pick(rng, 3, 6);
    const auto d = oracle::random_digraph(rng, n, oracle::pick(rng, n, 12));
    Rational previous = 0;
    bool previous_feasible = true;
    for (int k = 1; k <= 3; ++k) {
      const auto r = min_deorientations(d, ConnectivityTarget::arc(k));
      const auto brute = oracle::min_subset(d.num_arcs(), [&](const std::vector<int>& f) {
        return oracle::k_arc_strong(deorient_arcs(d, f), k);
      });
      REQUIRE(r.feasible == brute.has_value());
      if (r.feasible) {
        CHECK(r.optimum == Rational(static_cast<long>(brute->size())));
        CHECK(previous_feasible);
        CHECK(previous <= r.optimum);
        previous = r.optimum;
      }
      previous_feasible = r.feasible;
    }
    for (int l = 1; l <= 3; ++l) {
      const auto r = min_deorientations(d, ConnectivityTarget::strong(l));
      const auto brute = oracle::min_subset(d.num_arcs(), [&](const std::vector<int>& f) {
        return oracle::k_strong(deorient_arcs(d, f), l);
      });
      REQUIRE(r.feasible == brute.has_value());
      if (r.feasible) {
        CHECK(r.optimum == Rational(static_cast<long>(brute->size())));
        CHECK(is_k_strong(deorient_arcs(d, r.witness), l));
      }
    }
    const auto req = min_deorientations(d, ConnectivityTarget::requirement(Requirement::uniform(n, 1)));
    const auto one = min_deorientations(d, ConnectivityTarget::strong(1));
    CHECK(req.feasible == one.feasible);
    CHECK(req.optimum == one.optimum);
  }
}

TEST_CASE("doubling examples") {
  MixedGraph theta(2);
  for (int i = 0; i < 3; ++i) theta.add_edge(0, 1);
  CHECK(min_doubling(theta, {3}).optimum == Rational(0));
  for (int n = 3; n <= 6; ++n) {
    const auto r = min_doubling(oracle::cycle(n, false), {3});
    CHECK(r.optimum == Rational(n - 1));
    CHECK(is_k_edge_connected(double_edges(oracle::cycle(n, false), r.witness), 3));
  }
  CHECK(min_doubling(oracle::cycle(4, false), {4}).optimum == Rational(4));
  MixedGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK_FALSE(min_doubling(path, {3}).feasible);
}

TEST_CASE("weighted doubling agrees with subset enumeration") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = oracle::pick(rng, 3, 6);
    const auto g = oracle::random_graph(rng, n, oracle::pick(rng, n, 10));
    std::vector<Rational> w;
    for (int i = 0; i < g.num_edges(); ++i) w.push_back(Rational(oracle::pick(rng, 0, 6), oracle::pick(rng, 1, 3)));
    for (int c = 3; c <= 4; ++c) {
      const auto r = min_doubling(g, {c}, w);
      const auto brute = oracle::min_weight_subset(g.num_edges(), w, [&](const std::vector<int>& f) {
        return oracle::edge_connectivity(double_edges(g, f)) >= c;
      });
      REQUIRE(r.feasible == brute.has_value());
      if (brute) CHECK(r.optimum == *brute);
    }
  }
}

TEST_CASE("partial orientation examples") {
  const auto c4 = oracle::cycle(4, false);
  const auto r = max_partial_orientation(c4, ConnectivityTarget::arc(2));
  CHECK(r.feasible);
  CHECK(r.optimum == Rational(0));
  // Doubled C4 is 4-edge-connected and can be fully oriented.
  const int all[] = {0, 1, 2, 3};
  const auto d4 = double_edges(c4, all);
  const auto full = max_partial_orientation(d4, ConnectivityTarget::arc(2));
  CHECK(full.optimum == Rational(8));
  CHECK(is_k_arc_strong(PartialOrientation{d4, choices(full)}.realize(), 2));

  int brute_best = -1;
  oracle::for_each_partial_orientation(c4, true, [&](const MixedGraph& m, int kept) {
    if (oracle::k_arc_strong(m, 2)) brute_best = std::max(brute_best, 4 - kept);
  });
  CHECK(brute_best == 0);
}

TEST_CASE("orientation for a requirement") {
  MixedGraph tree(3);
  tree.add_edge(0, 1);
  tree.add_edge(1, 2);
  CHECK_FALSE(best_orientation_for_requirement(tree, Requirement::uniform(3, 1)).feasible);
  const auto c3 = oracle::cycle(3, false);
  const auto r = best_orientation_for_requirement(c3, Requirement::uniform(3, 1));
  CHECK(r.feasible);
  CHECK(is_strong(PartialOrientation{c3, choices(r)}.realize()));
}

TEST_CASE("vertex cover and max2sat") {
  const auto c4 = oracle::cycle(4, false);
  const auto vc = vertex_cover(c4);
  CHECK(vc.optimum == Rational(2));
  CHECK(vc.witness == std::vector<int>{0, 2});
  CHECK(vertex_cover(oracle::complete(5, false)).optimum == Rational(4));

  SatInstance s{1, {{{0, false}, {0, true}}, {{0, false}, {0, false}}, {{0, true}, {0, true}}}};
  const auto m = max2sat(s);
  CHECK(m.optimum == Rational(2));
  CHECK(m.witness == std::vector<int>{0});
}

TEST_CASE("required and forbidden elements") {
  const auto p = directed_path(3);
  SearchOptions o;
  o.forbidden = {1};
  CHECK_FALSE(min_deorientations(p, ConnectivityTarget::strong(1), o).feasible);
  MixedGraph t(3);
  t.add_arc(0, 1);
  t.add_arc(1, 2);
  t.add_arc(0, 2);
  SearchOptions forced;
  forced.required = {2};
  const auto r = min_reversals(t, ConnectivityTarget::arc(1), forced);
  CHECK(r.feasible);
  CHECK(r.optimum == Rational(1));
  CHECK(r.witness == std::vector<int>{2});
  forced.required = {0};
  CHECK(min_reversals(t, ConnectivityTarget::arc(1), forced).optimum == Rational(2));
  SearchOptions tight;
  tight.budget = Rational(0);
  CHECK_FALSE(min_reversals(t, ConnectivityTarget::arc(1), tight).feasible);
}

TEST_CASE("node limit raises a size error") {
  std::mt19937_64 rng(79);
  const auto d = oracle::random_digraph(rng, 8, 20);
  SearchOptions o;
  o.node_limit = 1;
  const auto strong_d = min_deorientations(d, ConnectivityTarget::arc(1));
  if (strong_d.feasible && strong_d.optimum > Rational(0)) {
    CHECK_THROWS_AS(min_deorientations(d, ConnectivityTarget::arc(1), o), SizeError);
  }
}
