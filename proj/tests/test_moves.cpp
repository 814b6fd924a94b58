#include <doctest.h>

#include <set>

#include "diagrams.hpp"
#include "gen.hpp"
#include "sg/braid.hpp"
#include "sg/moves.hpp"

using namespace sg;
using namespace sgtest;

namespace {

std::string key(const SlicedDiagram& s) { return serialize_sliced(s); }

bool has_kind(const std::vector<MoveInstance>& ms, MoveInstance::Kind k) {
  for (const auto& m : ms)
    if (m.kind == k) return true;
  return false;
}

}  // namespace

TEST_CASE("round unknot offers insertions but no removals") {
  GraphBraidWord w;
  w.strands0 = 1;
  auto s = closure(w);  // one max, one synthesized vertex, one min
  auto ms = enumerate_moves(s);
  CHECK(has_kind(ms, MoveInstance::Kind::R1Add));
  CHECK(has_kind(ms, MoveInstance::Kind::MinMaxAdd));
  CHECK_FALSE(has_kind(ms, MoveInstance::Kind::R1Remove));
  CHECK_FALSE(has_kind(ms, MoveInstance::Kind::R2Remove));
  CHECK_FALSE(has_kind(ms, MoveInstance::Kind::MinMaxCancel));
}

TEST_CASE("an adjacent cancelling pair offers R2-remove") {
  auto s = theta_diagram();
  MoveInstance add{MoveInstance::Kind::R2Add, 1, 1, 0};
  auto s2 = apply_move(s, add);
  REQUIRE(s2);
  auto ms = enumerate_moves(*s2);
  CHECK(has_kind(ms, MoveInstance::Kind::R2Remove));
  // removing restores the original verbatim
  bool restored = false;
  for (const auto& m : ms) {
    if (m.kind != MoveInstance::Kind::R2Remove) continue;
    auto s3 = apply_move(*s2, m);
    if (s3 && key(*s3) == key(s)) restored = true;
  }
  CHECK(restored);
}

TEST_CASE("zigzag add then cancel restores the diagram") {
  auto s = loop_diagram();
  MoveInstance add{MoveInstance::Kind::MinMaxAdd, 1, 1, 0};
  auto s2 = apply_move(s, add);
  REQUIRE(s2);
  MoveInstance cancel{MoveInstance::Kind::MinMaxCancel, 1};
  auto s3 = apply_move(*s2, cancel);
  REQUIRE(s3);
  CHECK(key(*s3) == key(s));
}

TEST_CASE("kink twists at caps and cups untie") {
  auto s = up_over_loop();
  REQUIRE(validate_sliced(s).ok);
  // the crossing capped by the min right below it is an untwistable kink
  auto ms = enumerate_moves(s);
  bool found = false;
  for (const auto& m : ms)
    if (m.kind == MoveInstance::Kind::R1Remove && m.form == 1) found = true;
  CHECK(found);
}

TEST_CASE("moves preserve validity, the graph, and linking numbers") {
  Rng rng(715);
  int checked_moves = 0;
  for (int trial = 0; trial < 25; ++trial) {
    auto s = random_diagram(rng, 4);
    auto g = underlying_graph(s);
    auto cycles = find_cycles(g, 12).oriented_cycles;
    // collect disjoint directed cycle pairs
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (std::size_t j = i + 1; j < cycles.size(); ++j)
        if (cycles_disjoint(g, cycles[i], cycles[j])) pairs.push_back({i, j});
    std::vector<int> before;
    for (auto [i, j] : pairs) before.push_back(linking_number(s, cycles[i], cycles[j]));

    auto ms = enumerate_moves(s);
    for (std::size_t mi = 0; mi < ms.size(); mi += 7) {  // sample for speed
      auto s2 = apply_move(s, ms[mi]);
      REQUIRE(s2);
      CHECK(validate_sliced(*s2).ok);
      CHECK(graphs_equal_labeled(underlying_graph(*s2), g));
      for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        auto [i, j] = pairs[pi];
        CHECK(linking_number(*s2, cycles[i], cycles[j]) == before[pi]);
      }
      ++checked_moves;
    }
  }
  CHECK(checked_moves > 100);
}

TEST_CASE("move sequences keep linking invariant") {
  Rng rng(99);
  auto s = hopf_diagram();
  int lk = linking_number(s, {"p"}, {"q"});
  auto scrambled = scramble(rng, s, 10);
  CHECK(validate_sliced(scrambled).ok);
  CHECK(linking_number(scrambled, {"p"}, {"q"}) == lk);
}

TEST_CASE("canonical diagram handles every random graph") {
  Rng rng(4242);
  for (int i = 0; i < 50; ++i) {
    auto g = random_graph(rng);
    auto s = canonical_diagram(g);
    CHECK(validate_sliced(s).ok);
    CHECK(graphs_equal_labeled(underlying_graph(s), g));
  }
}

TEST_CASE("generated circulating graphs satisfy the handshake identity") {
  Rng rng(27);
  for (int i = 0; i < 60; ++i) {
    auto g = random_circulating_graph(rng);
    REQUIRE(is_circulating(g));
    int sum = 0;
    for (const auto& [v, d] : degree_profile(g).degrees) sum += d.first - 1;
    CHECK(sum == -euler_characteristic(g));
    // every nonempty circulating graph is a union of directed cycles
    if (!g.edges.empty()) {
      auto scan = find_cycles(g, 4);
      CHECK(scan.has_unoriented_cycle);
      CHECK(scan.oriented_cycles.size() >= 1);
    }
  }
}
