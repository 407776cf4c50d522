#include "doctest.h"
#include "reorient/flow.hpp"

using namespace reorient;

TEST_CASE("parallel unit arcs carry two units") {
  FlowNetwork net(2, 0, 1);
  net.add_arc(0, 1, 1);
  net.add_arc(0, 1, 1);
  const auto r = max_flow(net);
  CHECK(r.feasible);
  CHECK(r.value == 2);
}

TEST_CASE("lower bound above capacity is infeasible") {
  FlowNetwork net(2, 0, 1);
  net.add_arc(0, 1, 1, 0, 2);
  CHECK_FALSE(max_flow(net).feasible);
  CHECK_FALSE(min_cost_feasible_flow(net).feasible);
}

TEST_CASE("lower bounds are respected by max flow") {
  // s -> a -> t with a forced unit on the detour s -> b -> a.
  FlowNetwork net(4, 0, 3);
  net.add_arc(0, 1, 1);
  net.add_arc(0, 2, 2, 0, 1);
  net.add_arc(2, 1, 2, 0, 1);
  net.add_arc(1, 3, 2);
  const auto r = max_flow(net);
  REQUIRE(r.feasible);
  CHECK(r.value == 2);
  CHECK(r.flow[1] >= 1);
  CHECK(r.flow[2] >= 1);
}

TEST_CASE("circulation demand without a path is infeasible") {
  FlowNetwork net(3, 0, 1);
  net.add_arc(2, 1, 3, 0, 1);
  CHECK_FALSE(max_flow(net).feasible);
}

TEST_CASE("min cost feasible flow takes the cheap route") {
  FlowNetwork net(4, 0, 3);
  net.add_arc(0, 1, 5, Rational(0), 2);
  net.add_arc(1, 3, 1, Rational(3));
  net.add_arc(1, 2, 5, Rational(1, 2));
  net.add_arc(2, 3, 5, Rational(1, 3));
  const auto r = min_cost_feasible_flow(net);
  REQUIRE(r.feasible);
  CHECK(r.value == 2);
  CHECK(r.cost == Rational(5, 3));
  CHECK(r.flow[1] == 0);
}

TEST_CASE("min cost flow with zero demand is empty") {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 4, Rational(2));
  net.add_arc(1, 2, 4, Rational(2));
  const auto r = min_cost_feasible_flow(net);
  REQUIRE(r.feasible);
  CHECK(r.cost == Rational(0));
  CHECK(r.value == 0);
}

TEST_CASE("invalid networks are rejected") {
  CHECK_THROWS(FlowNetwork(2, 0, 0));
  FlowNetwork net(2, 0, 1);
  CHECK_THROWS(net.add_arc(0, 1, -1));
  CHECK_THROWS(net.add_arc(0, 1, 1, Rational(-1)));
  CHECK_THROWS(net.add_arc(0, 2, 1));
}
