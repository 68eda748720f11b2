#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "taunak/tors.hpp"

using namespace taunak;

namespace {

SignedIndec S(const char* s) { return parse_signed(s); }

int vertex(const TorsLattice& lat, std::vector<SignedIndec> xs) { return lat.index_of(pair_from(xs)); }

}  // namespace

TEST_SUITE("tors") {

TEST_CASE("A2 lattice") {
  Nakayama a2(AlgebraSpec{2, {2, 1}});
  auto lat = build_lattice(a2);
  CHECK(lat.size() == 5);
  CHECK(lat.arrows.size() == 5);
  const int top = vertex(lat, {S("M(1,2)"), S("M(2,1)")});
  const int facp1 = vertex(lat, {S("M(1,2)"), S("M(1,1)")});
  const int facs1 = vertex(lat, {S("M(1,1)"), S("M(2,1)[1]")});
  const int facs2 = vertex(lat, {S("M(2,1)"), S("M(1,2)[1]")});
  const int zero = vertex(lat, {S("M(1,2)[1]"), S("M(2,1)[1]")});
  CHECK(lat.top == top);
  CHECK(lat.bottom == zero);
  auto label = [&](int from, int to) -> std::optional<Indec> {
    for (const auto& a : lat.arrows)
      if (a.from == from && a.to == to) return a.label;
    return std::nullopt;
  };
  CHECK(label(top, facp1) == Indec{2, 1});
  CHECK(label(facp1, facs1) == Indec{1, 2});
  CHECK(label(facs1, zero) == Indec{1, 1});
  CHECK(label(top, facs2) == Indec{1, 1});
  CHECK(label(facs2, zero) == Indec{2, 1});
  CHECK(x_of(lat, top) == SemibrickPair{{{1, 1}, {2, 1}}, {}});
  CHECK(x_of(lat, facp1) == SemibrickPair{{{1, 2}}, {{2, 1}}});
  CHECK(x_of(lat, zero) == SemibrickPair{{}, {{1, 1}, {2, 1}}});
  CHECK(lat.meet(facp1, facs2) == zero);
  CHECK(lat.join(facs1, facs2) == top);
}

TEST_CASE("lattice structure") {
  for (const auto& s : oracle::test_algebras()) {
    Nakayama a(s);
    const auto& lat = build_lattice_cached(a);
    INFO(s.name());
    std::set<IndecSet> classes(lat.torsion.begin(), lat.torsion.end());
    CHECK(static_cast<int>(classes.size()) == lat.size());
    for (int v = 0; v < lat.size(); ++v) CHECK(lat.out[v].size() + lat.in[v].size() == static_cast<size_t>(a.size()));
    for (int x = 0; x < lat.size(); ++x)
      for (int y = 0; y < lat.size(); ++y) {
        int m = lat.meet(x, y), j = lat.join(x, y);
        CHECK(lat.leq(m, x));
        CHECK(lat.leq(x, j));
      }
    for (const auto& ar : lat.arrows) {
      CHECK(lat.leq(ar.to, ar.from));
      CHECK(ar.from != ar.to);
      // Covering: nothing strictly between.
      for (int z = 0; z < lat.size(); ++z)
        if (z != ar.from && z != ar.to) CHECK_FALSE((lat.leq(ar.to, z) && lat.leq(z, ar.from)));
      CHECK(a.is_brick(ar.label));
      CHECK(label_by_torsion_pair(lat, ar) == ar.label);
      // Proper factors of the label lie in the target.
      for (int l = 1; l < ar.label.len; ++l)
        CHECK(std::binary_search(lat.torsion[ar.to].begin(), lat.torsion[ar.to].end(), Indec{ar.label.top, l}));
    }
    // Covers by inclusion are exactly the arrows.
    int covers = 0;
    for (int x = 0; x < lat.size(); ++x)
      for (int y = 0; y < lat.size(); ++y) {
        if (x == y || !lat.leq(y, x)) continue;
        bool cover = true;
        for (int z = 0; z < lat.size(); ++z)
          if (z != x && z != y && lat.leq(y, z) && lat.leq(z, x)) cover = false;
        covers += cover;
      }
    CHECK(covers == static_cast<int>(lat.arrows.size()));
  }
}

TEST_CASE("X(U) is a bijection onto the 2-smc") {
  for (const auto& s : oracle::test_algebras()) {
    const auto& lat = build_lattice_cached(Nakayama(s));
    std::set<SemibrickPair> xs;
    for (int v = 0; v < lat.size(); ++v) xs.insert(x_of(lat, v));
    auto all = all_smc(s);
    CHECK(xs == std::set<SemibrickPair>(all.begin(), all.end()));
    CHECK(static_cast<int>(xs.size()) == lat.size());
  }
}

TEST_CASE("polygons") {
  Nakayama a2(AlgebraSpec{2, {2, 1}});
  auto p2 = polygons(build_lattice(a2));
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].side1 == std::vector<Indec>{{1, 1}, {2, 1}});
  CHECK(p2[0].side2 == std::vector<Indec>{{2, 1}, {1, 2}, {1, 1}});
  for (const auto& s : oracle::test_algebras()) {
    Nakayama a(s);
    const auto& lat = build_lattice_cached(a);
    auto polys = polygons(lat);
    std::set<std::vector<Indec>> rank2;
    for (const auto& p : all_smc(s))
      if (p.positive.size() == 2) rank2.insert(p.positive);
    CHECK(polys.size() == rank2.size());
    for (const auto& p : polys) {
      INFO(s.name(), " polygon at ", format_pair(lat.vertices[p.top]));
      CHECK(p.side1.front() == p.side2.back());
      CHECK(p.side2.front() == p.side1.back());
      CHECK(p.side1.size() <= 3);
      CHECK(p.side2.size() <= 3);
      std::vector<Indec> simples{p.side1.front(), p.side2.front()};
      std::sort(simples.begin(), simples.end());
      CHECK(rank2.count(simples) == 1);
      std::vector<Indec> labels = p.side1;
      labels.insert(labels.end(), p.side2.begin() + 1, p.side2.end() - 1);
      std::sort(labels.begin(), labels.end());
      std::vector<Indec> bricks;
      for (auto b : filt_closure(a, simples))
        if (a.is_brick(b)) bricks.push_back(b);
      CHECK(labels == bricks);
    }
  }
}

TEST_CASE("maximal green sequences") {
  Nakayama a2(AlgebraSpec{2, {2, 1}});
  auto mgs = maximal_green_sequences(build_lattice(a2));
  std::set<std::vector<Indec>> got(mgs.begin(), mgs.end());
  CHECK(got == std::set<std::vector<Indec>>{{{1, 1}, {2, 1}}, {{2, 1}, {1, 2}, {1, 1}}});
  for (const auto& s : oracle::test_algebras()) {
    Nakayama a(s);
    for (const auto& w : maximal_green_sequences(build_lattice_cached(a))) {
      CHECK(w.front().len == 1);
      CHECK(static_cast<int>(w.size()) >= a.size());
    }
  }
}

TEST_CASE("interval isomorphism") {
  for (const auto& s : oracle::test_algebras()) {
    Nakayama a(s);
    const auto& lat = build_lattice_cached(a);
    for (const auto& u : all_tau_rigid(a)) {
      auto iso = interval_iso(lat, u);
      INFO(s.name(), " ", format_pair(u));
      CHECK(iso.bijective);
      CHECK(iso.order_preserving);
      CHECK(iso.label_preserving);
      // Fac(N ⊔ M) goes to Fac of the module part of E_u(M).
      for (const auto& xl : rigid_objects(a)) {
        if (xl.shifted || u.contains(xl)) continue;
        bool ok = true;
        for (const auto& z : u.members()) ok = ok && compatible(a, z, xl);
        if (!ok || u.rank() == 0) continue;
        auto nm = u.modules;
        nm.push_back(xl.base);
        int t = lat.index_of_torsion(fac(a, nm));
        REQUIRE(t >= 0);
        auto e = e_bijection(a, whole_category(a), u.members(), xl);
        std::vector<Indec> part;
        if (!e.shifted) part.push_back(*localize(a, iso.j, e.base));
        const auto& jl = build_lattice_cached(iso.j.local);
        CHECK(iso.to_j[t] == jl.index_of_torsion(fac(iso.j.local, part)));
      }
    }
  }
  Nakayama a2(AlgebraSpec{2, {2, 1}});
  auto iso = interval_iso(build_lattice(a2), pair_from({S("M(1,1)")}));
  CHECK(iso.j.simples == std::vector<Indec>{{1, 2}});
  CHECK(iso.to_j.size() == 2);
  CHECK_THROWS_AS(interval_iso(build_lattice(a2), pair_from({S("M(1,1)"), S("M(2,1)")})), std::invalid_argument);
}

TEST_CASE("DOT export") {
  auto dot = lattice_dot(build_lattice(Nakayama(AlgebraSpec{2, {2, 1}})));
  CHECK(dot.rfind("digraph tors", 0) == 0);
  CHECK(dot.find("label=\"M(1,2)\"") != std::string::npos);
}

}
