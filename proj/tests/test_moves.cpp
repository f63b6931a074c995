#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "deltalink/construct.hpp"
#include "deltalink/invariants.hpp"
#include "deltalink/moves.hpp"

using namespace deltalink;

namespace {

LinkDiagram hopf() { return LinkDiagram::parse_pd("X(1,4,2,3) X(3,2,4,1)"); }
LinkDiagram trefoil() { return rational_link({3}); }
LinkDiagram whitehead() { return rational_link({2, 1, 2}); }
LinkDiagram borromean() { return braid_closure(3, {1, -2, 1, -2, 1, -2}); }

std::vector<MoveSite> delta_sites(const LinkDiagram& d) {
  return enumerate_sites(d, kDeltaKinds);
}

} // namespace

TEST_CASE("hopf has no trigon sites") {
  CHECK(delta_sites(hopf()).empty());
  CHECK(enumerate_sites(hopf(), kind_bit(MoveKind::R3)).empty());
  CHECK(enumerate_sites(hopf(), kReductionKinds).empty());
}

TEST_CASE("kinked unknot reduces") {
  LinkDiagram d = LinkDiagram::parse_pd("X(1,2,2,1)");
  auto sites = enumerate_sites(d, kind_bit(MoveKind::R1Reduce));
  // on the sphere both sides of the kink bound monogons
  REQUIRE(!sites.empty());
  for (const auto& s : sites) {
    LinkDiagram r = apply(d, s);
    CHECK(r.crossing_count() == 0);
    CHECK(r.component_count() == 1);
  }
}

TEST_CASE("poked unlink reduces by R2") {
  LinkDiagram d = braid_closure(2, {1, -1});
  CHECK(d.component_count() == 2);
  auto sites = enumerate_sites(d, kind_bit(MoveKind::R2Reduce));
  REQUIRE(!sites.empty());
  LinkDiagram r = apply(d, sites[0]);
  CHECK(r.crossing_count() == 0);
  CHECK(r.component_count() == 2);
}

TEST_CASE("simplify flattens a doubly kinked unknot") {
  LinkDiagram d = braid_closure(2, {1, 1, -1, -1});
  LinkDiagram s = simplify(d);
  CHECK(s.crossing_count() == 0);
  CHECK(s.component_count() == 2);
}

TEST_CASE("trefoil trigons are self delta sites and unknot it") {
  LinkDiagram t = trefoil();
  auto sites = delta_sites(t);
  REQUIRE(!sites.empty());
  for (const auto& s : sites) CHECK(s.kind == MoveKind::DeltaSelf);
  CHECK(enumerate_sites(t, kind_bit(MoveKind::R3)).empty());
  LinkDiagram after = simplify(apply(t, sites[0]));
  CHECK(after.crossing_count() == 0);
  CHECK(after.component_count() == 1);
}

TEST_CASE("borromean rings split with one mixed delta move") {
  LinkDiagram b = borromean();
  auto sites = delta_sites(b);
  REQUIRE(!sites.empty());
  bool found_trivial = false;
  for (const auto& s : sites) {
    CHECK((s.kind == MoveKind::DeltaMixed3 || s.kind == MoveKind::DeltaSelf ||
           s.kind == MoveKind::DeltaMixed2));
    if (s.kind != MoveKind::DeltaMixed3) continue;
    LinkDiagram after = simplify(apply(b, s));
    if (after.crossing_count() == 0 && after.component_count() == 3)
      found_trivial = true;
  }
  CHECK(found_trivial);
}

TEST_CASE("whitehead splits with one delta move") {
  LinkDiagram w = whitehead();
  bool found = false;
  for (const auto& s : delta_sites(w)) {
    LinkDiagram after = simplify(apply(w, s));
    if (after.crossing_count() == 0 && after.component_count() == 2) found = true;
  }
  CHECK(found);
}

TEST_CASE("delta moves preserve the linking matrix") {
  int checked = 0;
  for (LinkDiagram d : {whitehead(), borromean(), rational_link({2, 2, 2, 2})}) {
    std::string lk = linking_matrix(d).canonical_class();
    for (const auto& s : delta_sites(d)) {
      LinkDiagram after = apply(d, s);
      CHECK(linking_matrix(after).canonical_class() == lk);
      CHECK(after.component_count() == d.component_count());
      checked++;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("self delta flips the arf invariant of its component") {
  for (LinkDiagram d : {trefoil(), rational_link({2, 2}), whitehead()}) {
    for (const auto& s : enumerate_sites(d, kDeltaSelfKind)) {
      LinkDiagram after = apply(d, s);
      CHECK(arf(after).has_value());
      CHECK(arf(after) != arf(d));
    }
  }
}

TEST_CASE("mixed delta preserves component polynomials") {
  InvariantCache cache;
  for (LinkDiagram d : {whitehead(), borromean()}) {
    auto comp_polys = [&](const LinkDiagram& x) {
      std::multiset<std::string> out;
      for (int i = 0; i < x.component_count(); i++)
        out.insert(conway(x.sublink({i}), &cache).str());
      return out;
    };
    auto before = comp_polys(d);
    for (const auto& s : enumerate_sites(d, kDeltaMixedKinds))
      CHECK(comp_polys(apply(d, s)) == before);
  }
}

TEST_CASE("double flip returns to the original state") {
  for (LinkDiagram d : {trefoil(), whitehead(), borromean()}) {
    for (const auto& s : delta_sites(d)) {
      LinkDiagram once = apply(d, s);
      bool recovered = false;
      for (const auto& s2 : delta_sites(once))
        if (apply(once, s2).state_key() == d.state_key()) recovered = true;
      CHECK(recovered);
    }
  }
}

TEST_CASE("r3 moves preserve the fingerprint") {
  InvariantCache cache;
  // sigma1 sigma2 sigma1: one strand passes over both others, the classic
  // ordered trigon
  LinkDiagram d = braid_closure(3, {1, 2, 1});
  auto r3 = enumerate_sites(d, kind_bit(MoveKind::R3));
  Fingerprint fp = fingerprint(d, &cache);
  int seen = 0;
  for (const auto& s : r3) {
    CHECK(fingerprint(apply(d, s), &cache) == fp);
    seen++;
  }
  CHECK(seen > 0);
}

TEST_CASE("additions preserve the fingerprint and reduce back") {
  InvariantCache cache;
  LinkDiagram d = whitehead();
  Fingerprint fp = fingerprint(d, &cache);
  auto adds = enumerate_sites(d, kind_bit(MoveKind::R1Add) | kind_bit(MoveKind::R2Add));
  REQUIRE(!adds.empty());
  int probe = 0;
  for (const auto& s : adds) {
    if (probe++ > 12) break; // a sample is enough
    LinkDiagram grown = apply(d, s);
    CHECK(grown.crossing_count() ==
          d.crossing_count() + (s.kind == MoveKind::R1Add ? 1 : 2));
    CHECK(fingerprint(grown, &cache) == fp);
    CHECK(simplify(grown).crossing_count() <= d.crossing_count());
  }
}

TEST_CASE("stale sites are rejected") {
  LinkDiagram t = trefoil();
  auto sites = delta_sites(t);
  REQUIRE(!sites.empty());
  CHECK_THROWS_AS(apply(whitehead(), sites[0]), StaleSite);
}

TEST_CASE("simplify is deterministic and never grows") {
  for (LinkDiagram d : {whitehead(), borromean(), braid_closure(2, {1, 1, -1})}) {
    LinkDiagram a = simplify(d);
    LinkDiagram b = simplify(d);
    CHECK(a.pd_string() == b.pd_string());
    CHECK(a.crossing_count() <= d.crossing_count());
  }
}

TEST_CASE("alternating minimal diagrams stay put under simplify") {
  for (LinkDiagram d : {trefoil(), whitehead(), borromean(), rational_link({2, 2})})
    CHECK(simplify(d).crossing_count() == d.crossing_count());
}
