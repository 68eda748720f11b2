#include <algorithm>
#include <deque>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "taunak/smc.hpp"
#include "taunak/tau_tilt.hpp"

using namespace taunak;

namespace {

SignedIndec S(const char* s) { return parse_signed(s); }

std::vector<WideSub> wides(const AlgebraSpec& s) {
  Nakayama a(s);
  std::vector<WideSub> out;
  std::set<std::vector<Indec>> seen;
  for (const auto& p : all_smc(s))
    if (seen.insert(p.positive).second) out.push_back(wide_as_algebra(a, p.positive));
  return out;
}

}  // namespace

TEST_SUITE("tau_tilt") {

TEST_CASE("rigidity examples") {
  Nakayama a2(AlgebraSpec{2, {2, 1}});
  CHECK(is_tau_rigid(a2, pair_from({S("M(1,2)"), S("M(2,1)")})).ok);
  CHECK(is_tau_rigid(a2, pair_from({S("M(1,1)"), S("M(2,1)[1]")})).ok);
  // Hom(S2, τS1) = Hom(S2, S2) != 0.
  CHECK_FALSE(is_tau_rigid(a2, pair_from({S("M(1,1)"), S("M(2,1)")})).ok);
  CHECK_THROWS_AS(is_tau_rigid(a2, pair_from({S("M(1,1)[1]")})), std::invalid_argument);
  CHECK(is_stt(a2, pair_from({S("M(1,2)[1]"), S("M(2,1)[1]")})));
}

TEST_CASE("mutation examples") {
  Nakayama a2(AlgebraSpec{2, {2, 1}});
  auto m = mutate_stt(a2, pair_from({S("M(1,1)"), S("M(2,1)[1]")}), S("M(1,1)"));
  CHECK(m.result == pair_from({S("M(1,2)[1]"), S("M(2,1)[1]")}));
  CHECK(m.left);
  auto top = mutate_stt(a2, pair_from({S("M(1,2)"), S("M(2,1)")}), S("M(2,1)"));
  CHECK(top.result == pair_from({S("M(1,2)"), S("M(1,1)")}));
  CHECK(top.left);
  CHECK_THROWS_AS(mutate_stt(a2, top.result, S("M(2,1)")), std::invalid_argument);
}

TEST_CASE("exchange graph") {
  for (const auto& s : oracle::test_algebras()) {
    Nakayama a(s);
    auto g = all_stt(a);
    int brute = 0;
    for (const auto& u : all_tau_rigid(a))
      if (u.rank() == a.size()) ++brute;
    CHECK(static_cast<int>(g.vertices.size()) == brute);
    CHECK(static_cast<int>(g.vertices.size()) == static_cast<int>(enumerate_maximal_patterns(s).size()));
    std::vector<int> degree(g.vertices.size(), 0);
    std::set<std::pair<int, int>> edges;
    for (const auto& e : g.edges) {
      ++degree[e.from];
      edges.insert({e.from, e.to});
      auto ff = fac(a, g.vertices[e.from].modules), ft = fac(a, g.vertices[e.to].modules);
      bool down = std::includes(ff.begin(), ff.end(), ft.begin(), ft.end()) && ff != ft;
      CHECK(e.left == down);
      CHECK(is_stt(a, g.vertices[e.to]));
    }
    for (int d : degree) CHECK(d == a.size());
    for (auto [x, y] : edges) CHECK(edges.count({y, x}) == 1);
    std::vector<char> seen(g.vertices.size(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const auto& e : g.edges)
        if (e.from == v && !seen[e.to]) {
          seen[e.to] = 1;
          q.push_back(e.to);
        }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](char c) { return c; }));
  }
}

TEST_CASE("Bongartz completion is the largest completion") {
  for (const auto& s : oracle::test_algebras()) {
    Nakayama a(s);
    const auto& g = all_stt_cached(a);
    for (const auto& u : all_tau_rigid(a)) {
      auto b = bongartz_complement(a, u);
      TauRigidPair t = u;
      t.modules.insert(t.modules.end(), b.begin(), b.end());
      t = canonical(t);
      REQUIRE(is_stt(a, t));
      auto top = fac(a, t.modules);
      CHECK(top == perpendicular_category(a, u));
      for (const auto& v : g.vertices) {
        bool contains = true;
        for (const auto& x : u.members()) contains = contains && v.contains(x);
        if (!contains) continue;
        auto f = fac(a, v.modules);
        CHECK(std::includes(top.begin(), top.end(), f.begin(), f.end()));
      }
    }
  }
}

TEST_CASE("re-presented wide subcategories match Filt closure") {
  for (const auto& s : oracle::test_algebras()) {
    Nakayama a(s);
    for (const auto& w : wides(s)) {
      INFO(s.name(), " rank ", w.rank());
      CHECK(members(a, w) == filt_closure(a, w.simples));
      CHECK(w.local.size() == w.rank());
      for (auto x : w.local.indecomposables()) {
        CHECK(localize(a, w, realize(a, w, x)) == x);
        for (auto y : w.local.indecomposables()) {
          auto rx = realize(a, w, x), ry = realize(a, w, y);
          CHECK(w.local.hom_dim(x, y) == a.hom_dim(rx, ry));
          CHECK(w.local.ext_dim(x, y) == a.ext_dim(rx, ry));
        }
      }
    }
  }
  Nakayama a3(AlgebraSpec{3, {3, 2, 1}});
  CHECK(whole_category(a3).local == a3);
  CHECK_THROWS_AS(wide_as_algebra(a3, {{1, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("Jasso reduction") {
  for (const auto& s : oracle::test_algebras()) {
    Nakayama a(s);
    const WideSub whole = whole_category(a);
    for (const auto& u : all_tau_rigid(a)) {
      auto j = jasso(a, whole, u);
      CHECK(j.rank() == a.size() - u.rank());
      IndecSet brute;
      for (auto y : a.indecomposables()) {
        bool ok = true;
        for (auto m : u.modules) {
          ok = ok && a.hom_dim(m, y) == 0;
          if (auto t = a.tau(m)) ok = ok && a.hom_dim(y, *t) == 0;
        }
        for (auto p : u.shifted) ok = ok && a.hom_dim(p, y) == 0;
        if (ok) brute.push_back(y);
      }
      CHECK(members(a, j) == brute);
    }
  }
  Nakayama c3(AlgebraSpec{3, {2, 2, 2}});
  CHECK(jasso(c3, whole_category(c3), pair_from({S("M(1,2)")})).simples == std::vector<Indec>{{2, 1}, {3, 1}});
}

TEST_CASE("E-bijection agrees with the lattice characterization") {
  for (const auto& s : oracle::test_algebras()) {
    Nakayama a(s);
    for (const auto& w : wides(s))
      for (const auto& ul : all_tau_rigid(w.local)) {
        if (ul.rank() == 0 || ul.rank() == w.rank()) continue;
        auto u = realize(a, w, ul);
        auto j = jasso(a, w, u);
        std::set<SignedIndec> image, expected;
        for (auto y : rigid_objects(j.local)) expected.insert(realize(a, j, y));
        for (const auto& xl : rigid_objects(w.local)) {
          if (ul.contains(xl)) continue;
          bool ok = true;
          for (const auto& z : ul.members()) ok = ok && compatible(w.local, z, xl);
          if (!ok) continue;
          auto x = realize(a, w, xl);
          auto e = e_bijection(a, w, u.members(), x);
          INFO(s.name(), " U=", format_pair(u), " X=", format_signed(x));
          CHECK(e == e_bijection_by_lattice(a, w, u, x));
          CHECK(e_inverse(a, w, u, e) == x);
          image.insert(e);
          auto order = u.members();
          while (std::next_permutation(order.begin(), order.end())) CHECK(e_bijection(a, w, order, x) == e);
        }
        CHECK(image == expected);
      }
  }
}

TEST_CASE("E-bijection examples") {
  Nakayama a2(AlgebraSpec{2, {2, 1}});
  auto whole = whole_category(a2);
  CHECK(e_bijection(a2, whole, {S("M(1,1)")}, S("M(1,2)")) == S("M(1,2)"));
  CHECK(e_bijection(a2, whole, {S("M(2,1)[1]")}, S("M(1,2)[1]")) == S("M(1,1)[1]"));
  CHECK_THROWS_AS(e_bijection(a2, whole, {S("M(1,1)")}, S("M(2,1)")), std::invalid_argument);
}

TEST_CASE("exceptional sequences") {
  for (const auto& s : oracle::small_algebras()) {
    Nakayama a(s);
    auto whole = whole_category(a);
    std::set<std::vector<std::pair<SignedIndec, std::vector<Indec>>>> seen;
    for (const auto& u : all_tau_rigid(a)) {
      if (u.rank() == 0) continue;
      auto order = u.members();
      do {
        auto seq = psi(a, whole, order);
        REQUIRE(seq.size() == order.size());
        std::vector<std::pair<SignedIndec, std::vector<Indec>>> key;
        for (size_t i = 0; i < seq.size(); ++i) {
          CHECK(seq[i].ambient.rank() == a.size() - static_cast<int>(seq.size() - 1 - i));
          CHECK(localize(a, seq[i].ambient, seq[i].object).has_value());
          key.push_back({seq[i].object, seq[i].ambient.simples});
        }
        CHECK(seq.back().object == order.back());
        CHECK(seen.insert(key).second);
        CHECK(psi_inverse(a, whole, seq) == order);
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  Nakayama a2(AlgebraSpec{2, {2, 1}});
  CHECK_THROWS_AS(psi(a2, whole_category(a2), {S("M(2,1)"), S("M(1,1)")}), std::invalid_argument);
}

}
