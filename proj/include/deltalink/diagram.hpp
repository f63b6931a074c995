#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "deltalink/errors.hpp"

namespace deltalink {

using Arc = int32_t;

// One crossing in PD convention: four arc labels counterclockwise starting
// from the incoming under-strand arc. The under-strand runs slot 0 -> slot 2;
// the over-strand occupies slots 1 and 3 (direction recovered by orientation
// propagation over the whole diagram).
struct CrossingTuple {
  std::array<Arc, 4> arc{};

  CrossingTuple() = default;
  CrossingTuple(Arc a, Arc b, Arc c, Arc d) : arc{a, b, c, d} {}
  Arc& operator[](int s) { return arc[(size_t)s]; }
  Arc operator[](int s) const { return arc[(size_t)s]; }
  bool operator==(const CrossingTuple&) const = default;
};

// A dart is one of the four arc-ends incident to a crossing.
struct Endpoint {
  int crossing = -1;
  int slot = -1;
  bool operator==(const Endpoint&) const = default;
};

// Face of the embedded diagram: cyclic sequence of (arc, side) incidences,
// where side selects which of the arc's two darts lies on this face.
struct Face {
  std::vector<std::pair<Arc, int>> boundary;
  std::vector<Endpoint> corners; // dart at each boundary step
  int degree() const { return (int)boundary.size(); }
};

// Instructions for removing a crossing while splicing its strands back
// together: slots are paired up (each slot maps to its partner).
struct Splice {
  int crossing = -1;
  std::array<int, 4> partner{1, 0, 3, 2};
};

// An oriented planar link diagram. Immutable after construction; every
// constructor fully validates (arc pairing, orientation consistency and
// planarity via face tracing).
class LinkDiagram {
public:
  LinkDiagram() { validate(); }
  LinkDiagram(std::vector<CrossingTuple> tuples, int closed_components);

  // Text form: whitespace-separated X(a,b,c,d) tuples, optional "+k" suffix
  // declaring k extra zero-crossing components.
  static LinkDiagram parse_pd(const std::string& text);
  std::string pd_string() const;

  // Accept tuples whose under-in slot may be off by a rotation: strands are
  // traced ignoring direction, oriented arbitrarily, and tuples rotated so
  // slot 0 is the actual incoming under arc.
  static LinkDiagram from_unoriented(std::vector<CrossingTuple> tuples, int closed);

  const std::vector<CrossingTuple>& crossings() const { return tuples_; }
  int crossing_count() const { return (int)tuples_.size(); }
  int closed_components() const { return closed_; }
  int strand_component_count() const { return n_strands_; }
  int component_count() const { return n_strands_ + closed_; }
  int arc_count() const { return (int)arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  int arc_index(Arc a) const; // dense index, -1 if absent
  int component_of_arc(Arc a) const;
  int component_of(int crossing, int slot) const {
    return component_of_arc(tuples_[(size_t)crossing][slot]);
  }

  // The two darts of an arc, in stored order.
  const std::array<Endpoint, 2>& arc_ends(Arc a) const;
  Endpoint other_end(int crossing, int slot) const;

  // Orientation queries. over_in_slot is 1 or 3.
  int over_in_slot(int crossing) const { return over_in_[(size_t)crossing]; }
  bool slot_is_inflow(int crossing, int slot) const;
  int sign(int crossing) const { return over_in_[(size_t)crossing] == 3 ? 1 : -1; }
  int writhe() const;

  // Components as arc cycles in traversal order (strand components only).
  const std::vector<std::vector<Arc>>& component_cycles() const { return comp_cycles_; }

  std::vector<Face> faces() const;

  LinkDiagram mirrored() const;
  // Reverse the orientation of the given strand components.
  LinkDiagram reversed(const std::vector<int>& comps) const;
  LinkDiagram sublink(const std::vector<int>& keep) const;
  static LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2);

  // Remove crossings according to splice instructions, reconnecting strands.
  // Fresh arc labels; re-validates.
  LinkDiagram resolved(const std::vector<Splice>& splices) const;
  // Same, but the splices need not respect orientation (unoriented
  // smoothings); strand directions are re-derived.
  LinkDiagram resolved_unoriented(const std::vector<Splice>& splices) const;
  // Replace the whole crossing list (arcs may be renumbered); re-validates.
  LinkDiagram with_tuples(std::vector<CrossingTuple> tuples, int closed) const;

  // Canonical encoding, invariant under arc/crossing relabeling.
  //   quotient_orientation: forget strand directions (unoriented diagram)
  //   with_reflection: also minimize over the back-of-the-sphere view
  std::string canonical_key(bool quotient_orientation, bool with_reflection) const;
  // Key used for search-state deduplication (unoriented, reflection-quotiented).
  std::string state_key() const { return canonical_key(true, true); }

  bool operator==(const LinkDiagram& o) const {
    return tuples_ == o.tuples_ && closed_ == o.closed_;
  }

private:
  std::vector<CrossingTuple> tuples_;
  int closed_ = 0;

  // derived by validate()
  std::vector<Arc> arcs_;                           // sorted distinct labels
  std::vector<std::array<Endpoint, 2>> ends_;       // per dense arc index
  std::vector<int> over_in_;                        // per crossing: 1 or 3
  std::vector<int> comp_of_arc_;                    // per dense arc index
  std::vector<std::vector<Arc>> comp_cycles_;
  int n_strands_ = 0;

  void validate();
  void trace_planarity() const;
  std::pair<std::vector<CrossingTuple>, int> splice_out(
      const std::vector<Splice>& splices) const;
};

} // namespace deltalink
