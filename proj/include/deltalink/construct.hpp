#pragma once

// Programmatic diagram constructions: braid closures and Conway-style
// tangle assembly. Used to build the shipped catalog data and as independent
// fixtures in tests.

#include <vector>

#include "deltalink/diagram.hpp"

namespace deltalink {

// Normalize tuples whose under-in slot may be wrong by rotation: traces
// strands ignoring direction, picks an orientation per component, and rotates
// each tuple so slot 0 is the actual incoming under arc.
LinkDiagram from_unoriented_tuples(std::vector<CrossingTuple> tuples, int closed);

// Closure of a braid word on `strands` strands. Letters are +-i for the
// generator crossing positions i-1 and i (1-based i); positive letters put
// the left strand on top.
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

// Open 4-ended tangle fragment with loose ends NW, NE, SE, SW.
struct Tangle {
  std::vector<CrossingTuple> tuples;
  Arc nw = 0, ne = 0, se = 0, sw = 0;
  Arc next = 1;
  int crossings() const { return (int)tuples.size(); }

  static Tangle zero();      // two horizontal strands
  static Tangle infinity();  // two vertical strands
  static Tangle horizontal(int n); // |n| right twists, sign by n
  static Tangle vertical(int n);   // |n| bottom twists, sign by n

  Tangle twisted_right(int sign) const;
  Tangle twisted_bottom(int sign) const;
  Tangle rotated() const; // quarter turn counterclockwise
};

// Horizontal sum: east side of a joins west side of b.
Tangle tangle_sum(const Tangle& a, const Tangle& b);
// Vertical stack: south side of a joins north side of b.
Tangle tangle_stack(const Tangle& a, const Tangle& b);

LinkDiagram numerator_closure(const Tangle& t);
LinkDiagram denominator_closure(const Tangle& t);

// Rational tangle for the Conway word (a1 a2 ... ak): a1 right twists, a2
// bottom twists, alternating.
Tangle rational_tangle(const std::vector<int>& word);
LinkDiagram rational_link(const std::vector<int>& word);

// Pretzel link P(p1,...,pk): numerator closure of summed vertical twist
// regions.
LinkDiagram pretzel_link(const std::vector<int>& twists);

// Every arc passes once over and once under.
bool is_alternating(const LinkDiagram& d);

} // namespace deltalink
