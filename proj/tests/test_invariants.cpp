#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deltalink/construct.hpp"
#include "deltalink/invariants.hpp"
#include "oracles.hpp"

#include <deque>
#include <functional>

using namespace deltalink;

namespace {

LinkDiagram hopf() { return LinkDiagram::parse_pd("X(1,4,2,3) X(3,2,4,1)"); }
LinkDiagram trefoil() { return LinkDiagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"); }
LinkDiagram fig8() { return LinkDiagram::parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"); }
LinkDiagram cinq() {
  return LinkDiagram::parse_pd("X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)");
}
LinkDiagram five2() {
  return LinkDiagram::parse_pd("X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)");
}
LinkDiagram whitehead() { return rational_link({2, 1, 2}); }
LinkDiagram borromean() { return braid_closure(3, {1, -2, 1, -2, 1, -2}); }

ZPoly zp(std::vector<long long> c) { return ZPoly(std::move(c)); }

} // namespace

TEST_CASE("conway base cases") {
  CHECK(conway(LinkDiagram::parse_pd("+1")) == zp({1}));
  CHECK(conway(LinkDiagram::parse_pd("+2")) == ZPoly::zero());
  CHECK(conway(LinkDiagram::parse_pd("X(1,2,2,1)")) == zp({1})); // kinked unknot
}

TEST_CASE("conway of the hopf link is -z for the stored orientation") {
  CHECK(conway(hopf()) == zp({0, -1}));
  CHECK(linking_matrix(hopf()).at(0, 1) == -1);
}

TEST_CASE("conway knot values") {
  CHECK(conway(trefoil()) == zp({1, 0, 1}));
  CHECK(conway(fig8()) == zp({1, 0, -1}));
  CHECK(conway(cinq()) == zp({1, 0, 3, 0, 1}));
  CHECK(conway(five2()) == zp({1, 0, 2}));
}

TEST_CASE("conway is mirror-even for knots") {
  for (auto d : {trefoil(), fig8(), cinq(), five2()})
    CHECK(conway(d.mirrored()) == conway(d));
}

TEST_CASE("conway vanishes on split diagrams") {
  CHECK(conway(LinkDiagram::disjoint_union(trefoil(), fig8())) == ZPoly::zero());
  CHECK(conway(LinkDiagram::disjoint_union(trefoil(), LinkDiagram::parse_pd("+1"))) ==
        ZPoly::zero());
}

TEST_CASE("conway coefficient parity follows component count") {
  for (auto d : {hopf(), whitehead(), trefoil(), borromean()}) {
    ZPoly p = conway(d);
    int m = d.component_count();
    for (int i = 0; i <= p.degree(); i++)
      if (p.coeff(i) != 0) CHECK((i - (m - 1)) % 2 == 0);
  }
}

TEST_CASE("rational constructions match the hand diagrams") {
  InvariantCache cache;
  CHECK(fingerprint(rational_link({3}), &cache) ==
        fingerprint(trefoil(), &cache));
  CHECK(fingerprint(rational_link({2, 2}), &cache) == fingerprint(fig8(), &cache));
  CHECK(fingerprint(rational_link({5}), &cache) == fingerprint(cinq(), &cache));
  CHECK(fingerprint(rational_link({3, 2}), &cache) == fingerprint(five2(), &cache));
  CHECK(fingerprint(rational_link({2}), &cache) == fingerprint(hopf(), &cache));
}

TEST_CASE("mirrored rational trefoil matches the mirrored hand trefoil") {
  InvariantCache cache;
  Fingerprint a = fingerprint(rational_link({3}).mirrored(), &cache);
  CHECK(a == fingerprint(trefoil().mirrored(), &cache));
  CHECK(!(a == fingerprint(trefoil(), &cache)));
}

TEST_CASE("whitehead link basics") {
  LinkDiagram w = whitehead();
  CHECK(w.crossing_count() == 5);
  CHECK(w.component_count() == 2);
  CHECK(is_alternating(w));
  CHECK(linking_matrix(w).all_zero());
  ZPoly p = conway(w);
  long long a3 = p.coeff(3);
  CHECK((a3 == 1 || a3 == -1));
  CHECK(p.coeff(1) == 0);
  for (int i : {0, 1})
    CHECK(conway(w.sublink({i})) == zp({1}));
}

TEST_CASE("borromean rings basics") {
  LinkDiagram b = borromean();
  CHECK(b.crossing_count() == 6);
  CHECK(b.component_count() == 3);
  CHECK(is_alternating(b));
  CHECK(linking_matrix(b).all_zero());
  long long a4 = conway(b).coeff(4);
  CHECK((a4 == 1 || a4 == -1));
  for (int i : {0, 1, 2})
    CHECK(conway(b.sublink({i})) == zp({1}));
}

TEST_CASE("alexander oracle agrees with the skein engine") {
  for (auto d : {trefoil(), fig8(), cinq(), five2(), hopf(), whitehead(),
                 trefoil().mirrored(), five2().mirrored()})
    CHECK(oracle::conway_matches_alexander(d, conway(d)));
}

TEST_CASE("arf invariant values") {
  CHECK(arf(LinkDiagram::parse_pd("+1")) == 0);
  CHECK(arf(trefoil()) == 1);
  CHECK(arf(trefoil().mirrored()) == 1);
  CHECK(arf(fig8()) == 1);
  CHECK(arf(cinq()) == 1);
  CHECK(arf(five2()) == 0);
  CHECK(arf(whitehead()) == 1);
  CHECK(arf(borromean()) == 1);
  CHECK(arf(LinkDiagram::parse_pd("+2")) == 0);
  CHECK(arf(LinkDiagram::parse_pd("+3")) == 0);
  CHECK(!arf(hopf()).has_value()); // linking number 1: not proper
}

TEST_CASE("arf is additive over split unions") {
  CHECK(arf(LinkDiagram::disjoint_union(trefoil(), LinkDiagram::parse_pd("+1"))) == 1);
  CHECK(arf(LinkDiagram::disjoint_union(trefoil(), fig8())) == 0);
  CHECK(arf(LinkDiagram::disjoint_union(five2(), fig8())) == 1);
}

TEST_CASE("delta invariants") {
  CHECK(delta_invariants(hopf()).delta1 == -1);
  FamilyKey w = delta_invariants(whitehead());
  CHECK(w.delta1 == 0);
  CHECK((w.delta2 == 1 || w.delta2 == -1));
  CHECK_THROWS_AS(delta_invariants(trefoil()), WrongComponentCount);
  CHECK_THROWS_AS(delta_invariants(LinkDiagram::parse_pd("+3")), WrongComponentCount);
}

TEST_CASE("delta invariants flip sign under mirror") {
  FamilyKey w = delta_invariants(whitehead());
  FamilyKey m = delta_invariants(whitehead().mirrored());
  CHECK(m.delta1 == -w.delta1);
  CHECK(m.delta2 == -w.delta2);
}

TEST_CASE("linking class canonicalization") {
  // the hopf link and its mirror have lk -1 / +1; per-component sign flips
  // identify them
  CHECK(linking_matrix(hopf()).canonical_class() ==
        linking_matrix(hopf().mirrored()).canonical_class());
  CHECK(linking_matrix(whitehead()).canonical_class() ==
        linking_matrix(LinkDiagram::parse_pd("+2")).canonical_class());
}

TEST_CASE("fingerprint distinguishes chirality but sees amphichirality") {
  InvariantCache cache;
  CHECK(!(fingerprint(trefoil(), &cache) == fingerprint(trefoil().mirrored(), &cache)));
  CHECK(fingerprint(fig8(), &cache) == fingerprint(fig8().mirrored(), &cache));
}

TEST_CASE("fingerprint is invariant under relabeling") {
  InvariantCache cache;
  LinkDiagram a = trefoil();
  LinkDiagram b = LinkDiagram::parse_pd("X(15,12,16,13) X(11,14,12,15) X(13,16,14,11)");
  CHECK(fingerprint(a, &cache) == fingerprint(b, &cache));
}

TEST_CASE("resource limit budget") {
  CHECK_THROWS_AS(conway(whitehead(), nullptr, 2), ResourceLimit);
}
