#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "reorient/connectivity.hpp"
#include "reorient/exact.hpp"
#include "reorient/polyalg.hpp"

using namespace reorient;

namespace {

std::vector<MixedGraph> two_edge_connected_pool(std::uint64_t seed, int count, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<MixedGraph> pool;
  while (static_cast<int>(pool.size()) < count) {
    const int n = oracle::pick(rng, 2, max_n);
    const int m = oracle::pick(rng, n, n + 4);
    auto g = oracle::random_graph(rng, n, m);
    if (oracle::edge_connectivity(g) >= 2) pool.push_back(std::move(g));
  }
  return pool;
}

MixedGraph deorient_with(const MixedGraph& d, const std::vector<int>& arcs) { return deorient_arcs(d, arcs); }

bool degree_ok(const MixedGraph& m, int k) {
  for (const auto& deg : degrees(m)) {
    if (std::min(deg.out + deg.undirected, deg.in + deg.undirected) < k) return false;
  }
  return true;
}

/// Each branching spans V, has one arc into every non-root vertex (out of, for in-branchings)
/// and reaches every vertex from the root; branchings share no arc.
void check_packing(const MixedGraph& d, const PackingResult& p, int k) {
  const int n = d.num_vertices();
  const bool out = p.packing.direction == BranchingDirection::out;
  REQUIRE(static_cast<int>(p.packing.branchings.size()) == k);
  std::set<int> used;
  for (const auto& b : p.packing.branchings) {
    CHECK(static_cast<int>(b.size()) == n - 1);
    MixedGraph tree(n);
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (int a : b) {
      CHECK(used.insert(a).second);
      const auto& arc = d.arc(a);
      ++hits[out ? arc.head : arc.tail];
      tree.add_arc(arc.tail, arc.head);
    }
    for (VertexId v = 0; v < n; ++v) CHECK(hits[v] == (v == p.packing.root ? 0 : 1));
    const std::uint64_t all = (1ULL << n) - 1;
    CHECK(oracle::reach(tree, p.packing.root, all, !out) == all);
  }
}

}  // namespace

TEST_CASE("robbins examples") {
  const auto c4 = oracle::cycle(4, false);
  const auto r = robbins_partial_orientation(c4, 4);
  REQUIRE(r.feasible);
  CHECK(r.orientation.oriented_count() == 4);
  CHECK(oracle::strong_on(r.orientation.realize(), 0xF));

  MixedGraph bowtie(6);
  for (int base : {0, 3}) {
    bowtie.add_edge(base, base + 1);
    bowtie.add_edge(base + 1, base + 2);
    bowtie.add_edge(base + 2, base);
  }
  bowtie.add_edge(2, 3);
  const auto too_many = robbins_partial_orientation(bowtie, 7);
  CHECK_FALSE(too_many.feasible);
  CHECK(too_many.bound == 6);
  const auto six = robbins_partial_orientation(bowtie, 6);
  REQUIRE(six.feasible);
  CHECK(oracle::strong_on(six.orientation.realize(), 0x3F));

  const auto zero = robbins_partial_orientation(bowtie, 0);
  REQUIRE(zero.feasible);
  CHECK(zero.orientation.realize() == bowtie);

  MixedGraph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_FALSE(robbins_partial_orientation(split, 0).feasible);
}

TEST_CASE("robbins bound matches exhaustive partial orientation") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 0; m <= 6; ++m) {
      for (const auto& g : oracle::multigraphs_up_to_iso(n, m, 3)) {
        if (!oracle::connected(g)) continue;
        int best = -1;
        oracle::for_each_partial_orientation(g, true, [&](const MixedGraph& h, int kept) {
          if (oracle::strong_on(h, (1ULL << n) - 1)) best = std::max(best, m - kept);
        });
        CHECK(best == m - oracle::count_bridges(g));
        for (int k = 0; k <= m; ++k) {
          const auto r = robbins_partial_orientation(g, k);
          CHECK(r.bound == best);
          CHECK(r.feasible == (k <= best));
          if (r.feasible) {
            CHECK(r.orientation.oriented_count() == k);
            CHECK(oracle::strong_on(r.orientation.realize(), (1ULL << n) - 1));
          }
        }
      }
    }
  }
}

TEST_CASE("w23eda examples") {
  const auto c5 = w23eda(oracle::cycle(5, false));
  REQUIRE(c5.feasible);
  CHECK(c5.optimum == Rational(4));
  CHECK(c5.witness == std::vector<int>{0, 1, 2, 3});

  const auto k4 = w23eda(oracle::complete(4, false));
  CHECK(k4.optimum == Rational(0));
  CHECK(cactus_quotient(oracle::complete(4, false)).quotient.num_vertices() == 1);

  const auto tri = w23eda(oracle::cycle(3, false), {Rational(1), Rational(2), Rational(3)});
  CHECK(tri.optimum == Rational(3));
  CHECK(tri.witness == std::vector<int>{0, 1});

  MixedGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK_FALSE(w23eda(path).feasible);
}

TEST_CASE("w23eda equals the exact doubling optimum and quotients are cactuses") {
  std::mt19937_64 rng(23);
  for (const auto& g : two_edge_connected_pool(0x23ed, 80, 7)) {
    std::vector<Rational> w;
    for (int i = 0; i < g.num_edges(); ++i) w.push_back(Rational(oracle::pick(rng, 0, 6), oracle::pick(rng, 1, 3)));
    const auto fast = w23eda(g, w);
    const auto exact = min_doubling(g, DoublingTarget{3, false}, w);
    REQUIRE(fast.feasible);
    REQUIRE(exact.feasible);
    CHECK(fast.optimum == exact.optimum);
    CHECK(oracle::edge_connectivity(double_edges(g, fast.witness)) >= 3);

    const auto q = cactus_quotient(g);
    CHECK(is_cactus(q.quotient));
    if (q.quotient.num_vertices() >= 2) {
      bool has_degree_two = false;
      for (const auto& d : degrees(q.quotient)) has_degree_two |= d.undirected == 2;
      CHECK(has_degree_two);
    }
  }
}

TEST_CASE("doubling a cactus gives 3-edge-connectivity exactly when the doubled edges connect V") {
  for (const auto& g : two_edge_connected_pool(0xBA0, 60, 8)) {
    const auto q = cactus_quotient(g).quotient;
    const int m = q.num_edges();
    if (m > 12) continue;
    for (std::uint64_t s = 0; s < (1ULL << m); ++s) {
      std::vector<int> f;
      MixedGraph spanning(q.num_vertices());
      for (int i = 0; i < m; ++i) {
        if ((s >> i) & 1U) {
          f.push_back(i);
          spanning.add_edge(q.edge(i).u, q.edge(i).v);
        }
      }
      CHECK((oracle::edge_connectivity(double_edges(q, f)) >= 3) == oracle::connected(spanning));
    }
  }
}

TEST_CASE("degree deorientation examples") {
  const auto c3 = oracle::cycle(3, true);
  CHECK(degree_deorientation(c3, 1).optimum == Rational(0));
  const auto two = degree_deorientation(c3, 2);
  REQUIRE(two.feasible);
  CHECK(two.optimum == Rational(3));
  CHECK_FALSE(degree_deorientation(c3, 3).feasible);

  MixedGraph star(4);
  for (int leaf = 1; leaf < 4; ++leaf) star.add_arc(0, leaf);
  // Leaves have no out-arc and the centre no in-arc: every arc must become an edge.
  CHECK(degree_deorientation(star, 1).optimum == Rational(3));
}

TEST_CASE("degree deorientation agrees with subset enumeration") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = oracle::pick(rng, 2, 5);
    const int m = oracle::pick(rng, 0, 7);
    const auto d = oracle::random_digraph(rng, n, m);
    const int k = oracle::pick(rng, 0, 3);
    const auto fast = degree_deorientation(d, k);
    const auto brute = oracle::min_subset(m, [&](const std::vector<int>& f) { return degree_ok(deorient_with(d, f), k); });
    REQUIRE(fast.feasible == brute.has_value());
    if (!brute) continue;
    CHECK(fast.optimum == Rational(static_cast<int>(brute->size())));
    CHECK(static_cast<int>(fast.witness.size()) == static_cast<int>(brute->size()));
    CHECK(degree_ok(deorient_with(d, fast.witness), k));
  }
}

TEST_CASE("branching packing examples") {
  const auto tri = oracle::complete(3, true);
  const auto p = min_weight_branching_packing(tri, 2, 0, {}, BranchingDirection::out);
  REQUIRE(p.feasible);
  CHECK(p.weight == Rational(4));
  check_packing(tri, p, 2);

  MixedGraph path(3);
  path.add_arc(0, 1);
  path.add_arc(1, 2);
  const auto bad = min_weight_branching_packing(path, 2, 0, {}, BranchingDirection::out);
  CHECK_FALSE(bad.feasible);
  REQUIRE(bad.violated_cut.has_value());
  CHECK(bad.violated_cut->side == std::vector<VertexId>{2});
  CHECK(bad.violated_cut->d_minus == 1);

  const auto in_bad = min_weight_branching_packing(path, 1, 0, {}, BranchingDirection::in);
  CHECK_FALSE(in_bad.feasible);
  REQUIRE(in_bad.violated_cut.has_value());
  CHECK(in_bad.violated_cut->d_plus < 1);
}

TEST_CASE("branching packings are minimum and valid") {
  std::mt19937_64 rng(5150);
  int feasible_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = oracle::pick(rng, 2, 5);
    const int m = oracle::pick(rng, n - 1, 11);
    const auto d = oracle::random_digraph(rng, n, m);
    const int k = oracle::pick(rng, 1, 2);
    const VertexId s = oracle::pick(rng, 0, n - 1);
    const auto dir = oracle::pick(rng, 0, 1) ? BranchingDirection::out : BranchingDirection::in;
    std::vector<Rational> w;
    for (int i = 0; i < m; ++i) w.push_back(Rational(oracle::pick(rng, 0, 4)));
    const auto p = min_weight_branching_packing(d, k, s, w, dir);
    const auto rooted = [&](const std::vector<int>& arcs) {
      MixedGraph h(n);
      for (int a : arcs) h.add_arc(d.arc(a).tail, d.arc(a).head);
      for (VertexId v = 0; v < n; ++v) {
        if (v == s) continue;
        const int l = dir == BranchingDirection::out ? oracle::lambda(h, s, v) : oracle::lambda(h, v, s);
        if (l < k) return false;
      }
      return true;
    };
    const auto brute = oracle::min_weight_subset(m, w, rooted);
    REQUIRE(p.feasible == brute.has_value());
    if (!p.feasible) {
      REQUIRE(p.violated_cut.has_value());
      const auto& c = *p.violated_cut;
      CHECK(std::find(c.side.begin(), c.side.end(), s) == c.side.end());
      CHECK((dir == BranchingDirection::out ? c.d_minus : c.d_plus) < k);
      continue;
    }
    ++feasible_seen;
    CHECK(p.weight == *brute);
    check_packing(d, p, k);
  }
  CHECK(feasible_seen > 20);
}

TEST_CASE("deorientation 2-approximation") {
  const auto strong = oracle::cycle(5, true);
  const auto none = deor_k_arc_2approx(strong, 1);
  REQUIRE(none.feasible);
  CHECK(none.arcs.empty());
  CHECK(none.out_packing.weight == Rational(0));
  CHECK(none.in_packing.weight == Rational(0));

  MixedGraph path(3);
  path.add_arc(0, 1);
  path.add_arc(1, 2);
  const auto both = deor_k_arc_2approx(path, 1);
  REQUIRE(both.feasible);
  CHECK(both.arcs == std::vector<int>{0, 1});
  CHECK_FALSE(deor_k_arc_2approx(path, 2).feasible);

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = oracle::pick(rng, 2, 5);
    const int m = oracle::pick(rng, n, 10);
    const auto d = oracle::random_digraph(rng, n, m);
    const int k = oracle::pick(rng, 1, 2);
    const VertexId root = oracle::pick(rng, 0, n - 1);
    const auto approx = deor_k_arc_2approx(d, k, root);
    const auto brute =
        oracle::min_subset(m, [&](const std::vector<int>& f) { return oracle::k_arc_strong(deorient_with(d, f), k); });
    REQUIRE(approx.feasible == brute.has_value());
    if (!brute) continue;
    CHECK(oracle::k_arc_strong(deorient_with(d, approx.arcs), k));
    CHECK(approx.arcs.size() <= 2 * brute->size());
  }
}

TEST_CASE("m4eda approximation with the exact plug") {
  const auto c4 = m4eda_approx(oracle::cycle(4, false));
  REQUIRE(c4.feasible);
  CHECK(c4.doubled == std::vector<int>{0, 1, 2, 3});
  CHECK(c4.forced == std::vector<int>{0, 1, 2, 3});

  MixedGraph k5 = oracle::complete(5, false);
  const auto none = m4eda_approx(k5);
  REQUIRE(none.feasible);
  CHECK(none.doubled.empty());

  for (const auto& g : two_edge_connected_pool(0x4EDA, 60, 7)) {
    const auto approx = m4eda_approx(g);
    const auto exact = min_doubling(g, DoublingTarget{4, false});
    REQUIRE(approx.feasible == exact.feasible);
    if (!exact.feasible) continue;
    CHECK(Rational(static_cast<int>(approx.doubled.size())) == exact.optimum);
    CHECK(oracle::edge_connectivity(double_edges(g, approx.doubled)) >= 4);
  }

  const AugmentationPlug everything = [](const MixedGraph&, const std::vector<int>& candidates) { return candidates; };
  const auto all = m4eda_approx(oracle::complete(4, false), everything);
  CHECK(all.feasible);
}
