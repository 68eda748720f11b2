#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "oracle.hpp"
#include "taunak/io.hpp"

using namespace taunak;

TEST_SUITE("io") {

TEST_CASE("JSON round trips") {
  for (const auto& s : oracle::test_algebras()) {
    CHECK(json(s).get<AlgebraSpec>() == s);
    for (const auto& p : enumerate_maximal_patterns(s)) {
      CHECK(json::parse(json(p).dump()).get<ArcPattern>() == p);
      auto q = pair_of(p);
      CHECK(json::parse(json(q).dump()).get<SemibrickPair>() == q);
    }
    const auto& lat = build_lattice_cached(Nakayama(s));
    for (const auto& v : lat.vertices) CHECK(json::parse(json(v).dump()).get<TauRigidPair>() == v);
    for (Style st : {Style::polygon, Style::mgs, Style::coset}) {
      auto p = presentation(lat, st);
      auto back = json::parse(json(p).dump()).get<Presentation>();
      CHECK(back.generators == p.generators);
      CHECK(back.cosets == p.cosets);
      CHECK(back.relations == p.relations);
    }
  }
}

TEST_CASE("word tokens") {
  CHECK(json(Letter{{1, 2}, -1, -1}).get<std::string>() == "X[M(1,2)]^-1");
  CHECK(json("g[3]").get<Letter>().coset == 3);
  CHECK_THROWS(json("Y[1]").get<Letter>());
}

TEST_CASE("spec files") {
  const std::string path = "taunak_spec_test.json";
  {
    std::ofstream out(path);
    out << R"({"n": 3, "kupisch": [2, 2, 2]})";
  }
  CHECK(load_spec_file(path) == AlgebraSpec{3, {2, 2, 2}});
  {
    std::ofstream out(path);
    out << R"({"n": 3, "kupisch": [1, 2]})";
  }
  CHECK_THROWS_AS(load_spec_file(path), SpecError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_spec_file("no_such_file.json"), SpecError);
}

TEST_CASE("polygon census export") {
  auto j = polygons_json(build_lattice_cached(Nakayama(AlgebraSpec{2, {2, 1}})));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["sides"][1].size() == 3);
  CHECK(j[0]["top"]["modules"][0] == "M(1,2)");
}

}
