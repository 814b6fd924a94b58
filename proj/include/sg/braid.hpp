#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sg/layout.hpp"
#include "sg/sliced.hpp"

namespace sg {

// One letter of a generalized closed braid word.  Strand indices count from
// the innermost strand (index 1); a vertex letter's in/out edge lists run
// from inner to outer.
struct BraidLetter {
  enum class Kind { Cross, Vertex };
  Kind kind = Kind::Cross;
  int index = 1;
  int sign = 1;          // Cross: +1 iff the outer incoming strand passes over
  std::string vertex;    // Vertex
  std::vector<std::string> ins, outs;
  bool operator==(const BraidLetter&) const = default;
};

struct GraphBraidWord {
  std::string name = "w";
  int strands0 = 0;  // strand count at the seam
  std::vector<BraidLetter> letters;
};

struct WordCheck {
  bool ok = true;
  std::string message;
  OrientedGraph graph;                  // labeled closure graph (with synthesized
                                        // vertices on vertex-free components)
  std::vector<std::string> seam_edges;  // strand labels at the seam, inner first
  // Labels per gap: gap 0 is the seam, gap i follows letter i-1.
  std::vector<std::vector<std::string>> gap_edges;
  // Synthesized 2-valent vertices: (vertex id, loop edge id, seam strand index).
  std::vector<std::tuple<std::string, std::string, int>> synthesized;
};

WordCheck validate_word(const GraphBraidWord& w);

// Maximum running strand count over the angular gaps between letters.
int b_tilde(const GraphBraidWord& w);

// Renders the word as a descending tangle closed by nested maxima above and
// minima below; the result's underlying graph is the word's labeled graph.
SlicedDiagram closure(const GraphBraidWord& w);

// The full pipeline: layout, crossing normalization, up-column isolation,
// wrapping, word extraction.
GraphBraidWord extract_word(const RectLayout& annular);
GraphBraidWord braid(const SlicedDiagram& s);

GraphBraidWord parse_braidword(std::string_view text);
std::string serialize_braidword(const GraphBraidWord& w);

}  // namespace sg
