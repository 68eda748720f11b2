#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "taunak/category.hpp"

using namespace taunak;

namespace {

SignedIndec S(const char* s) { return parse_signed(s); }

}  // namespace

TEST_SUITE("category") {

TEST_CASE("A2 counts and composition") {
  ClusterCategory a2(AlgebraSpec{2, {2, 1}});
  CHECK(a2.objects().size() == 5);
  CHECK(a2.morphisms_of_rank(1).size() == 11);
  CHECK(a2.morphisms_of_rank(2).size() == 5);
  const auto top = a2.top().simples;
  MorphW f{top, pair_from({S("M(1,1)")})};
  CHECK(a2.target(f) == std::vector<Indec>{{1, 2}});
  MorphW g{{{1, 2}}, pair_from({S("M(1,2)")})};
  auto h = a2.compose(f, g);
  CHECK(h == MorphW{top, pair_from({S("M(1,1)"), S("M(1,2)")})});
  CHECK(a2.target(h).empty());
  CHECK(a2.compose(a2.identity(a2.top()), f) == f);
  CHECK(a2.compose(f, a2.identity(a2.object({{1, 2}}))) == f);
  CHECK_THROWS_AS(a2.compose(g, f), std::invalid_argument);
}

TEST_CASE("C3 three-summand factorization cube") {
  ClusterCategory c3(AlgebraSpec{3, {2, 2, 2}});
  const auto top = c3.top().simples;
  MorphW f{top, pair_from({S("M(1,2)"), S("M(1,1)"), S("M(3,2)[1]")})};
  auto cube = c3.factorization_cube(f);
  CHECK(cube.vertex.size() == 8);
  CHECK(cube.injective);
  CHECK(c3.count_maximal_chains(f) == 6);
  CHECK(c3.count_factorizations(f) == 8);
  CHECK(c3.last_factors(f).size() == 3);
  CHECK(c3.target(MorphW{top, pair_from({S("M(1,2)")})}) == std::vector<Indec>{{2, 1}, {3, 1}});
  // [S3[1]] ∘ [P2[1]] ∘ [P1].
  MorphW p1{top, pair_from({S("M(1,2)")})};
  MorphW p2{c3.target(p1), pair_from({S("M(2,2)[1]")})};  // local P2 of J(P1) is M(2,2)
  auto step = c3.compose(p1, p2);
  MorphW s3{c3.target(step), pair_from({S("M(3,1)[1]")})};
  CHECK(c3.compose(step, s3) == f);
}

TEST_CASE("last factors recover X(U)") {
  for (const auto& s : oracle::test_algebras()) {
    ClusterCategory cat(s);
    for (const auto& w : cat.objects()) {
      if (w.rank() == 0) continue;
      const auto& lat = build_lattice_cached(w.local);
      for (int v = 0; v < lat.size(); ++v) {
        MorphW f{w.simples, realize(cat.algebra(), w, lat.vertices[v])};
        std::set<SignedIndec> want, got;
        for (const auto& x : x_of(lat, v).signed_members()) want.insert(realize(cat.algebra(), w, x));
        for (const auto& g : cat.last_factors(f)) got.insert(cat.br_inverse(g));
        CHECK(want == got);
      }
    }
  }
}

TEST_CASE("cubical axioms") {
  for (const auto& s : oracle::test_algebras()) {
    ClusterCategory cat(s);
    auto r = check_cubical(cat, s.n <= 3 || s == AlgebraSpec{4, {3, 3, 3, 3}});
    INFO(s.name(), " ", r.violation);
    CHECK(r.ok());
  }
}

TEST_CASE("objects are closed under reduction") {
  for (const auto& s : oracle::test_algebras()) {
    ClusterCategory cat(s);
    for (const auto& f : cat.all_morphisms()) CHECK(cat.has_object(cat.target(f)));
    for (const auto& w : cat.objects()) {
      int to_zero = 0;
      for (const auto& f : cat.morphisms_from(w)) to_zero += cat.target(f).empty();
      CHECK(to_zero == static_cast<int>(all_stt_cached(w.local).vertices.size()));
      if (w.rank() == 1) CHECK(to_zero == 2);
    }
  }
}

TEST_CASE("cube complex") {
  ClusterCategory a2(AlgebraSpec{2, {2, 1}});
  auto cx = build_cube_complex(a2);
  CHECK(cx.cubes_by_rank == std::vector<int>{5, 11, 5});
  CHECK(cx.cells_by_rank == std::vector<int>{1, 3, 1});
  CHECK(cx.flag());
  ClusterCategory a3(AlgebraSpec{3, {3, 2, 1}});
  CHECK(build_cube_complex(a3, 2).cells_by_rank == std::vector<int>{1, 6, 6, 1});
  ClusterCategory one(AlgebraSpec{1, {1}});
  CHECK(build_cube_complex(one).cubes_by_rank == std::vector<int>{2, 2});
  for (const auto& s : oracle::test_algebras()) {
    ClusterCategory cat(s);
    auto c = build_cube_complex(cat, 2);
    for (const auto& l : c.links) {
      INFO(s.name(), " ", l.detail);
      CHECK(l.simplicial);
      CHECK(l.flag);
      CHECK(l.forward_sphere);
    }
  }
  CHECK(complex_dot(a2).find("sq0") != std::string::npos);
}

TEST_CASE("two-cells match polygons") {
  for (const auto& s : oracle::test_algebras()) {
    ClusterCategory cat(s);
    const auto& lat = build_lattice_cached(cat.algebra());
    auto polys = polygons(lat);
    for (const auto& w : cat.objects()) {
      if (w.rank() != 2) continue;
      auto local = polygons(build_lattice_cached(w.local));
      REQUIRE(local.size() == 1);
      std::vector<Indec> side1, side2;
      for (auto b : local[0].side1) side1.push_back(realize(cat.algebra(), w, b));
      for (auto b : local[0].side2) side2.push_back(realize(cat.algebra(), w, b));
      bool found = false;
      for (const auto& p : polys)
        if ((p.side1 == side1 && p.side2 == side2) || (p.side1 == side2 && p.side2 == side1)) found = true;
      CHECK(found);
    }
  }
}

}
