#include <doctest.h>

#include "diagrams.hpp"
#include "gen.hpp"
#include "sg/braid.hpp"
#include "sg/search.hpp"

using namespace sg;
using namespace sgtest;

TEST_CASE("minimize returns immediately at the global floor") {
  auto r = minimize_smoothing(theta_diagram(), 1000, 4);
  CHECK(r.mu == 1);
  CHECK_FALSE(r.exhausted_budget);
}

TEST_CASE("minimize removes an inserted cancelling pair") {
  auto s = theta_diagram();
  auto s2 = apply_move(s, {MoveInstance::Kind::R2Add, 1, 1, 0});
  REQUIRE(s2);
  auto r = minimize_smoothing(*s2, 5000, 2);
  CHECK(r.mu == 1);
}

TEST_CASE("minimize merges a split forest+cycle diagram") {
  auto s = forest_cycle_diagram();
  CHECK(complex_stats(smooth(s)).mu == 2);
  auto r = minimize_smoothing(s, 20000, 3);
  CHECK(r.mu == 1);  // max{1, chi} = max{1, 1} = 1
}

TEST_CASE("the knotted example 1 diagram already smooths to one component") {
  auto s = example1_g();
  CHECK(complex_stats(smooth(s)).mu == 1);
  auto r = minimize_smoothing(s, 100000, 12);
  CHECK(r.mu == 1);
  CHECK(graphs_equal_labeled(underlying_graph(r.best), underlying_graph(s)));
}

TEST_CASE("minimize untwists kinks through caps and cups") {
  auto s = up_over_loop();
  CHECK(complex_stats(smooth(s)).mu == 3);
  auto r = minimize_smoothing(s, 20000, 3);
  CHECK(r.mu == 1);
}

TEST_CASE("hook_trees merges tree components one crossing each") {
  auto s = forest_cycle_diagram();
  auto hooked = hook_trees(s, {{"z1", "u1"}});
  CHECK(validate_sliced(hooked).ok);
  CHECK(complex_stats(smooth(hooked)).mu == 1);
  int crossings = 0;
  for (const auto& e : hooked.events) crossings += e.kind == Event::Kind::Cross;
  CHECK(crossings == 1);

  CHECK(serialize_sliced(hook_trees(s, {})) == serialize_sliced(s));  // zero assignments
}

TEST_CASE("hook_trees with two trees drops mu by two") {
  // The base component's smoothing must keep beta1 headroom for every hook:
  // a four-edge circulating pair gives beta1 = 3.
  SlicedDiagram s;
  s.name = "circ4_two_trees";
  s.graph.vertices = {"a", "b", "z1", "z2", "y1", "y2"};
  s.graph.edges = {{"e1", "a", "b"}, {"e2", "a", "b"},  {"e3", "b", "a"},
                   {"e4", "b", "a"}, {"t1", "z1", "z2"}, {"t2", "y1", "y2"}};
  s.events = {
      Event::max(1, "e4", Event::Side::Left),
      Event::max(2, "e3", Event::Side::Left),
      Event::vertex_event("a", 1, {"e4", "e3"}, {"e1", "e2"}),
      Event::vertex_event("z1", 1, {}, {"t1"}),
      Event::vertex_event("z2", 1, {"t1"}, {}),
      Event::vertex_event("y1", 2, {}, {"t2"}),
      Event::vertex_event("y2", 2, {"t2"}, {}),
      Event::vertex_event("b", 1, {"e1", "e2"}, {"e4", "e3"}),
      Event::min(2, "e3"),
      Event::min(1, "e4"),
  };
  REQUIRE(validate_sliced(s).ok);
  CHECK(complex_stats(smooth(s)).mu == 3);
  // distinct target arcs: puncturing both keeps the smoothing connected
  auto hooked = hook_trees(s, {{"z1", "e1"}, {"y1", "e2"}});
  CHECK(complex_stats(smooth(hooked)).mu == 1);
}

TEST_CASE("two hooks through one circle only merge once") {
  // With beta1(S) = 1 on the base, the second hook re-splits a component.
  SlicedDiagram s;
  s.name = "cycle_two_trees";
  s.graph.vertices = {"w1", "w2", "z1", "z2", "y1", "y2"};
  s.graph.edges = {{"u1", "w1", "w2"}, {"u2", "w2", "w1"}, {"t1", "z1", "z2"}, {"t2", "y1", "y2"}};
  s.events = {
      Event::max(1, "u2", Event::Side::Left),
      Event::vertex_event("w1", 1, {"u2"}, {"u1"}),
      Event::vertex_event("z1", 1, {}, {"t1"}),
      Event::vertex_event("z2", 1, {"t1"}, {}),
      Event::vertex_event("y1", 1, {}, {"t2"}),
      Event::vertex_event("y2", 1, {"t2"}, {}),
      Event::vertex_event("w2", 1, {"u1"}, {"u2"}),
      Event::min(1, "u2"),
  };
  REQUIRE(validate_sliced(s).ok);
  CHECK(complex_stats(smooth(s)).mu == 3);
  auto hooked = hook_trees(s, {{"z1", "u1"}, {"y1", "u1"}});
  CHECK(complex_stats(smooth(hooked)).mu == 2);
}

TEST_CASE("hook_trees rejects bad assignments") {
  auto s = forest_cycle_diagram();
  CHECK_THROWS(hook_trees(s, {{"w1", "t1"}}));            // cycle component, not a tree
  CHECK_THROWS(hook_trees(s, {{"z1", "t1"}}));            // target inside the tree
  CHECK_THROWS(hook_trees(s, {{"z1", "u1"}, {"z2", "u2"}}));  // same tree twice
}

TEST_CASE("s_bounds values") {
  auto rt = s_bounds(theta_diagram(), 1000, 2);
  CHECK(rt.s_lower == 1);
  CHECK(rt.s_exact);
  CHECK(rt.s_upper == 1);

  auto r1 = s_bounds(trivial_example1(), 1000, 2);
  CHECK(r1.s_lower == 1);
  CHECK_FALSE(r1.s_exact);  // circulating
  CHECK(r1.s_upper == 1);

  // A two-tree forest: chi = 2, attained by the crossing-free diagram.
  SlicedDiagram f;
  f.name = "forest2";
  f.graph.vertices = {"a", "b", "c", "d"};
  f.graph.edges = {{"p", "a", "b"}, {"q", "c", "d"}};
  f.events = {
      Event::vertex_event("a", 1, {}, {"p"}),
      Event::vertex_event("b", 1, {"p"}, {}),
      Event::vertex_event("c", 1, {}, {"q"}),
      Event::vertex_event("d", 1, {"q"}, {}),
  };
  REQUIRE(validate_sliced(f).ok);
  auto rf = s_bounds(f, 2000, 2);
  CHECK(rf.s_lower == 2);
  CHECK(rf.s_exact);
  CHECK(rf.s_upper == 2);
}

TEST_CASE("b_bounds values") {
  auto r = b_bounds(trivial_example1(), {});
  CHECK(r.b_upper == 4);
  CHECK(r.b_lower == 1);

  auto rl = b_bounds(loop_diagram(), {{{"e"}, 1}});
  CHECK(rl.b_upper == 1);
  CHECK(rl.b_lower == 1);

  // The knotted embedding contains a trefoil on the (e1, e5) cycle.
  auto rg = b_bounds(example1_g(), {{{"e1", "e5"}, 2}});
  CHECK(rg.b_lower == 2);
  CHECK(rg.b_upper >= rg.b_lower);

  // An unoriented cycle with one source discounts the bridge bound.
  auto ru = b_bounds(trivial_example1(), {{{"e1", "e2"}, 2}});
  CHECK(ru.b_lower == 1);  // 2 - alpha(1) = 1
}

TEST_CASE("circulating certificate") {
  auto c = s_certificate_circulating(trivial_example1(), {"e1", "e5"}, 1);
  CHECK(c.bound == -5);  // 1 + chi = 1 - 6
  CHECK(c.vacuous);
  CHECK(c.mu >= c.bound);

  auto ch = s_certificate_circulating(hopf_diagram(), {"p"}, 2);
  CHECK(ch.bound == 2);  // 2 + chi(two loops) = 2
  CHECK_FALSE(ch.vacuous);
  CHECK(ch.mu == 2);

  CHECK_THROWS(s_certificate_circulating(theta_diagram(), {"e1"}, 1));
}

TEST_CASE("minimize determinism") {
  auto s = example1_g();
  auto a = minimize_smoothing(s, 3000, 3);
  auto b = minimize_smoothing(s, 3000, 3);
  CHECK(serialize_sliced(a.best) == serialize_sliced(b.best));
  CHECK(a.mu == b.mu);
  CHECK(a.visited == b.visited);
}
