#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "deltalink/diagram.hpp"

using namespace deltalink;

namespace {

std::multiset<int> face_degrees(const LinkDiagram& d) {
  std::multiset<int> out;
  for (const Face& f : d.faces()) out.insert(f.degree());
  return out;
}

const char* kHopf = "X(1,4,2,3) X(3,2,4,1)";
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kFig8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

} // namespace

TEST_CASE("parse hopf link") {
  LinkDiagram d = LinkDiagram::parse_pd(kHopf);
  CHECK(d.crossing_count() == 2);
  CHECK(d.component_count() == 2);
  CHECK(d.arc_count() == 4);
  CHECK(d.closed_components() == 0);
}

TEST_CASE("parse empty diagram with closed components") {
  LinkDiagram d = LinkDiagram::parse_pd("+1");
  CHECK(d.crossing_count() == 0);
  CHECK(d.component_count() == 1);
  CHECK(d.faces().size() == 2);
}

TEST_CASE("dangling arc rejected") {
  CHECK_THROWS_AS(LinkDiagram::parse_pd("X(1,2,3,4)"), DanglingArc);
}

TEST_CASE("malformed input rejected") {
  CHECK_THROWS_AS(LinkDiagram::parse_pd("X(1,2,3)"), MalformedInput);
  CHECK_THROWS_AS(LinkDiagram::parse_pd("Y(1,2,3,4)"), MalformedInput);
  CHECK_THROWS_AS(LinkDiagram::parse_pd("X(1,2,3,4,5)"), MalformedInput);
}

TEST_CASE("round trip") {
  for (const char* pd : {kHopf, kTrefoil, kFig8}) {
    LinkDiagram d = LinkDiagram::parse_pd(pd);
    LinkDiagram e = LinkDiagram::parse_pd(d.pd_string());
    CHECK(d.crossings() == e.crossings());
    CHECK(d.closed_components() == e.closed_components());
  }
}

TEST_CASE("hopf faces") {
  LinkDiagram d = LinkDiagram::parse_pd(kHopf);
  std::multiset<int> expect{2, 2, 2, 2};
  CHECK(face_degrees(d) == expect);
}

TEST_CASE("trefoil faces") {
  LinkDiagram d = LinkDiagram::parse_pd(kTrefoil);
  std::multiset<int> expect{2, 2, 2, 3, 3};
  CHECK(face_degrees(d) == expect);
}

TEST_CASE("face degrees sum to twice the arc count") {
  for (const char* pd : {kHopf, kTrefoil, kFig8}) {
    LinkDiagram d = LinkDiagram::parse_pd(pd);
    int sum = 0;
    for (const Face& f : d.faces()) sum += f.degree();
    CHECK(sum == 2 * d.arc_count());
  }
}

TEST_CASE("one-crossing kink is planar and traces one component") {
  LinkDiagram d = LinkDiagram::parse_pd("X(1,2,2,1)");
  CHECK(d.component_count() == 1);
  std::multiset<int> expect{1, 1, 2};
  CHECK(face_degrees(d) == expect);
}

TEST_CASE("hopf crossing signs agree and |lk| contributions match") {
  LinkDiagram d = LinkDiagram::parse_pd(kHopf);
  CHECK(d.sign(0) == d.sign(1));
}

TEST_CASE("trefoil from the knot atlas is the negative (left-handed) diagram") {
  LinkDiagram d = LinkDiagram::parse_pd(kTrefoil);
  CHECK(d.writhe() == -3);
  CHECK(d.component_count() == 1);
}

TEST_CASE("mirror is an involution on tuples") {
  for (const char* pd : {kHopf, kTrefoil, kFig8}) {
    LinkDiagram d = LinkDiagram::parse_pd(pd);
    LinkDiagram m = d.mirrored();
    CHECK(m.writhe() == -d.writhe());
    LinkDiagram mm = m.mirrored();
    CHECK(mm.canonical_key(false, false) == d.canonical_key(false, false));
  }
}

TEST_CASE("mirror swaps over/under") {
  LinkDiagram d = LinkDiagram::parse_pd(kTrefoil);
  LinkDiagram m = d.mirrored();
  CHECK(m.writhe() == 3);
  CHECK(m.canonical_key(true, false) != d.canonical_key(true, false));
  // chirality survives the reflection quotient
  CHECK(m.state_key() != d.state_key());
}

TEST_CASE("state key equates the back-of-the-sphere view") {
  LinkDiagram d = LinkDiagram::parse_pd(kTrefoil);
  // reverse every rotation, then swap over/under: the same diagram seen from
  // behind
  std::vector<CrossingTuple> rev;
  for (const CrossingTuple& t : d.crossings()) rev.push_back({t[0], t[3], t[2], t[1]});
  LinkDiagram behind = LinkDiagram(rev, 0).mirrored();
  CHECK(behind.state_key() == d.state_key());
}

TEST_CASE("canonical key invariant under relabeling") {
  LinkDiagram d = LinkDiagram::parse_pd(kTrefoil);
  // same diagram, arcs renamed and crossings permuted
  LinkDiagram e = LinkDiagram::parse_pd("X(15,12,16,13) X(11,14,12,15) X(13,16,14,11)");
  CHECK(d.canonical_key(false, false) == e.canonical_key(false, false));
  CHECK(d.state_key() == e.state_key());
  LinkDiagram f = LinkDiagram::parse_pd(kFig8);
  CHECK(d.state_key() != f.state_key());
}

TEST_CASE("sublink of hopf is an unknot") {
  LinkDiagram d = LinkDiagram::parse_pd(kHopf);
  LinkDiagram s = d.sublink({0});
  CHECK(s.component_count() == 1);
  CHECK(s.crossing_count() == 0);
  CHECK(s.closed_components() == 1);
}

TEST_CASE("sublink keeping everything preserves structure") {
  LinkDiagram d = LinkDiagram::parse_pd(kHopf);
  LinkDiagram s = d.sublink({0, 1});
  CHECK(s.component_count() == 2);
  CHECK(s.crossing_count() == 2);
  CHECK(s.state_key() == d.state_key());
}

TEST_CASE("sublink rejects empty selection") {
  LinkDiagram d = LinkDiagram::parse_pd(kHopf);
  CHECK_THROWS_AS(d.sublink({}), EmptySelection);
}

TEST_CASE("disjoint union") {
  LinkDiagram d1 = LinkDiagram::parse_pd(kTrefoil);
  LinkDiagram d2 = LinkDiagram::parse_pd(kHopf);
  LinkDiagram u = LinkDiagram::disjoint_union(d1, d2);
  CHECK(u.component_count() == 3);
  CHECK(u.crossing_count() == 5);
  LinkDiagram t = LinkDiagram::disjoint_union(LinkDiagram::parse_pd("+1"),
                                              LinkDiagram::parse_pd("+1"));
  CHECK(t.component_count() == 2);
  CHECK(t.crossing_count() == 0);
}

TEST_CASE("strand tracing returns to start") {
  for (const char* pd : {kHopf, kTrefoil, kFig8}) {
    LinkDiagram d = LinkDiagram::parse_pd(pd);
    int total = 0;
    for (const auto& cycle : d.component_cycles()) total += (int)cycle.size();
    CHECK(total == d.arc_count());
  }
}

TEST_CASE("nonplanar virtual code rejected") {
  // virtual kink: one crossing of a strand with itself, no planar embedding
  CHECK_THROWS_AS(LinkDiagram::parse_pd("X(1,2,1,2)"), NonPlanar);
}

TEST_CASE("reversed component flips writhe contribution of mixed crossings") {
  LinkDiagram d = LinkDiagram::parse_pd(kHopf);
  LinkDiagram r = d.reversed({1});
  CHECK(r.sign(0) == -d.sign(0));
  CHECK(r.sign(1) == -d.sign(1));
  // reversing all components gives back the same signs
  LinkDiagram rr = d.reversed({0, 1});
  CHECK(rr.sign(0) == d.sign(0));
}
