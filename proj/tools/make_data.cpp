// Regenerates the bundled example files under data/.  The diagrams are the
// same ones the test suite builds in code; keeping the files in normalized
// serialized form makes the round-trip checks byte-exact.

#include <fstream>
#include <iostream>

#include "sg/braid.hpp"
#include "sg/graph.hpp"
#include "sg/moves.hpp"
#include "sg/sliced.hpp"

#include "../tests/diagrams.hpp"

namespace {

void put(const std::string& dir, const std::string& name, const std::string& text) {
  std::ofstream f(dir + "/" + name);
  if (!f) {
    std::cerr << "cannot write " << dir << "/" << name << "\n";
    std::exit(1);
  }
  f << text;
  std::cout << "wrote " << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  using namespace sgtest;

  auto trivial = trivial_example1();
  put(dir, "example1.sgg", sg::serialize_graph(trivial.graph));
  put(dir, "trivial-example1.sgs", sg::serialize_sliced(trivial));

  auto g = example1_g();
  put(dir, "example1-g.sgs", sg::serialize_sliced(g));

  // The braid word of the knotted embedding with three extra stabilizing
  // zigzags: seven strands at the seam.
  sg::SlicedDiagram g7 = g;
  for (int i = 0; i < 3; ++i) {
    // zigzag on e1's strand, right below vertex a
    auto next = sg::apply_move(g7, {sg::MoveInstance::Kind::MinMaxAdd, 5, 1, 0});
    if (!next) {
      std::cerr << "zigzag insertion failed\n";
      return 1;
    }
    g7 = *next;
  }
  auto w7 = sg::braid(g7);
  w7.name = "example1_g";
  put(dir, "example1-g.gbw", sg::serialize_braidword(w7));

  put(dir, "hopf.sgs", sg::serialize_sliced(hopf_diagram()));
  put(dir, "theta.sgs", sg::serialize_sliced(theta_diagram()));
  put(dir, "loop.sgs", sg::serialize_sliced(loop_diagram()));
  put(dir, "path-cycle.sgs", sg::serialize_sliced(path_cycle_diagram()));
  put(dir, "forest-cycle.sgs", sg::serialize_sliced(forest_cycle_diagram()));
  put(dir, "circ4.sgs", sg::serialize_sliced(circ4_diagram()));
  put(dir, "trefoil.sgs", sg::serialize_sliced(trefoil_loop()));
  put(dir, "up-over-loop.sgs", sg::serialize_sliced(up_over_loop()));
  return 0;
}
