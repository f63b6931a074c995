#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "deltalink/catalog.hpp"
#include "deltalink/construct.hpp"
#include "deltalink/moves.hpp"

using namespace deltalink;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    path = std::string("catalog_test_") + std::to_string(rand()) + ".txt";
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string small_catalog() {
  LinkDiagram tre = rational_link({3});
  LinkDiagram wh = rational_link({2, 1, 2});
  std::string s;
  s += "# test catalog\n";
  s += "name = 0_1 ; pd = +1 ; u_delta = 0\n";
  s += "name = 3_1 ; pd = " + tre.pd_string() + " ; u_delta = 1 ; arf = 1\n";
  s += "name = m3_1 ; pd = " + tre.mirrored().pd_string() +
       " ; mirror_of = 3_1 ; u_delta = 1 ; arf = 1\n";
  s += "name = trivial2 ; pd = +2 ; family = 0,0\n";
  s += "name = W ; pd = " + wh.pd_string() +
       " ; components = 0_1,0_1 ; arf = 1 ; sp = 2 ; u_delta = 1 ; sp_delta = 1 ; "
       "sp_mdelta = 1 ; unknown_key = zzz\n";
  return s;
}

} // namespace

TEST_CASE("catalog loads, validates and identifies") {
  TempFile f(small_catalog());
  Catalog cat = Catalog::load(f.path);
  CHECK(cat.entries().size() == 5);
  CHECK(cat.warnings().size() == 1); // the unknown key

  CHECK(cat.identify(rational_link({3})) == std::vector<std::string>{"3_1"});
  CHECK(cat.identify(rational_link({3}).mirrored()) == std::vector<std::string>{"m3_1"});
  CHECK(cat.identify(rational_link({2, 1, 2})) == std::vector<std::string>{"W"});
  // an unknown link yields no names
  CHECK(cat.identify(rational_link({2, 2})).empty());
  // trivial links identify even beyond shipped entries
  CHECK(cat.identify(LinkDiagram::parse_pd("+3")) ==
        std::vector<std::string>{"trivial3"});
  CHECK(cat.identify(LinkDiagram::parse_pd("+2")) ==
        std::vector<std::string>{"trivial2"});
}

TEST_CASE("scrambled unknot identifies after simplify") {
  TempFile f(small_catalog());
  Catalog cat = Catalog::load(f.path);
  LinkDiagram noisy = braid_closure(2, {1, 1, -1, 1});
  CHECK(cat.identify(simplify(noisy)).empty()); // hopf link, not in this catalog
  LinkDiagram k = braid_closure(2, {1, -1, 1});
  CHECK(cat.identify(simplify(k)) == std::vector<std::string>{"0_1"});
}

TEST_CASE("empty catalog") {
  TempFile f("\n# nothing\n");
  Catalog cat = Catalog::load(f.path);
  CHECK(cat.entries().empty());
}

TEST_CASE("component mismatch is a validation error") {
  LinkDiagram wh = rational_link({2, 1, 2});
  TempFile f("name = 0_1 ; pd = +1\nname = 3_1 ; pd = " +
             rational_link({3}).pd_string() +
             "\nname = W ; pd = " + wh.pd_string() + " ; components = 0_1,3_1\n");
  CHECK_THROWS_AS(Catalog::load(f.path), ValidationError);
}

TEST_CASE("parse errors carry line information") {
  TempFile f("name = A\n");
  try {
    Catalog::load(f.path);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("duplicate fingerprints rejected unless recorded") {
  std::string pd = rational_link({3}).pd_string();
  TempFile f("name = A ; pd = " + pd + "\nname = B ; pd = " + pd + "\n");
  CHECK_THROWS_AS(Catalog::load(f.path), ValidationError);
}

TEST_CASE("interval parsing") {
  BoundInterval b = BoundInterval::parse("2");
  CHECK(b.exact());
  CHECK(b.lower == 2);
  b = BoundInterval::parse("1-3");
  CHECK(!b.exact());
  CHECK(b.admits(2));
  b = BoundInterval::parse("1-3p1");
  CHECK(b.admits(1));
  CHECK(b.admits(3));
  CHECK(!b.admits(2));
  CHECK(BoundInterval::parse("2-4p0").contains(BoundInterval::exactly(4)));
  CHECK(!BoundInterval::parse("1-3p1").contains(BoundInterval::exactly(2)));
  CHECK_THROWS_AS(BoundInterval::parse("x"), ParseError);
}

TEST_CASE("knot u_delta lookup strips mirrors") {
  TempFile f(small_catalog());
  Catalog cat = Catalog::load(f.path);
  CHECK(cat.knot_u_delta("3_1") == 1);
  CHECK(cat.knot_u_delta("m3_1") == 1);
  CHECK(cat.knot_u_delta("0_1") == 0);
  CHECK(!cat.knot_u_delta("9_99").has_value());
}

TEST_CASE("resolve references") {
  TempFile f(small_catalog());
  Catalog cat = Catalog::load(f.path);
  CHECK(cat.resolve("3_1").crossing_count() == 3);
  CHECK(cat.resolve("pd:X(1,2,2,1)").crossing_count() == 1);
  CHECK(cat.resolve("mW").crossing_count() == 5); // mirror prefix resolution
  CHECK(cat.resolve("trivial4").component_count() == 4);
  CHECK_THROWS_AS(cat.resolve("nope"), UnknownValue);
}
