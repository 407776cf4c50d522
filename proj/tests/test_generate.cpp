#include "doctest.h"
#include "reorient/connectivity.hpp"
#include "reorient/generate.hpp"
#include "reorient/polyalg.hpp"

using namespace reorient;

TEST_CASE("generators are deterministic per seed") {
  CHECK(random_digraph(6, 10, 3) == random_digraph(6, 10, 3));
  CHECK(random_cactus(9, 5) == random_cactus(9, 5));
  CHECK(random_s3b_sat(4, 2) == random_s3b_sat(4, 2));
  CHECK_FALSE(random_digraph(6, 10, 3) == random_digraph(6, 10, 4));
}

TEST_CASE("random digraphs have the requested size and no loops") {
  const auto d = random_digraph(5, 12, 1);
  CHECK(d.num_vertices() == 5);
  CHECK(d.num_arcs() == 12);
  CHECK(d.num_edges() == 0);
  for (const auto& a : d.arcs()) CHECK(a.tail != a.head);
}

TEST_CASE("random cacti have pairwise edge-connectivity exactly two") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const auto g = random_cactus(n, seed);
    REQUIRE(g.num_vertices() == n);
    CHECK(is_cactus(g));
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) CHECK(local_edge_connectivity(g, x, y) == 2);
    }
  }
}

TEST_CASE("random S3B formulas have the required shape") {
  for (int vars : {2, 4, 6, 10}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto sat = random_s3b_sat(vars, seed);
      CHECK(sat.num_vars == vars);
      CHECK(sat.clauses.size() == static_cast<std::size_t>(3 * vars / 2));
      CHECK(sat.has_s3b_shape());
      for (const auto& c : sat.clauses) CHECK(c[0].var != c[1].var);
    }
  }
  CHECK_THROWS(random_s3b_sat(3, 0));
}
