#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "taunak/smc.hpp"
#include "taunak/tors.hpp"

using namespace taunak;

TEST_SUITE("smc") {

TEST_CASE("the C3 counterexample") {
  AlgebraSpec c3{3, {2, 2, 2}};
  Nakayama a(c3);
  SemibrickPair p{{{1, 2}}, {{2, 2}}};
  CHECK(is_semibrick_pair(a, p).ok);
  auto mc = is_mutation_compatible(a, p);
  CHECK_FALSE(mc.ok);
  CHECK(mc.x == Indec{2, 2});
  CHECK(mc.y == Indec{1, 2});
  auto c = is_completable(c3, p);
  CHECK_FALSE(c.completable);
  CHECK_FALSE(c.obstruction.ok);
  CHECK_FALSE(completable_by_containment(enumerate_maximal_patterns(c3), p));
}

TEST_CASE("semibrick checks") {
  Nakayama a2(AlgebraSpec{2, {2, 1}});
  CHECK(is_semibrick(a2, {{1, 1}, {2, 1}}).ok);
  CHECK_FALSE(is_semibrick(a2, {{1, 2}, {2, 1}}).ok);
  CHECK(is_semibrick_pair(a2, {{{1, 1}}, {{1, 2}}}).ok);
  CHECK_FALSE(is_semibrick_pair(a2, {{{1, 2}}, {{1, 1}}}).ok);
  Nakayama loop(AlgebraSpec{1, {3}});
  CHECK_FALSE(is_semibrick(loop, {{1, 2}}).ok);
}

TEST_CASE("completability is mutation compatibility") {
  for (const auto& s : oracle::small_algebras()) {
    Nakayama a(s);
    auto maximal = enumerate_maximal_patterns(s);
    auto bricks = a.bricks();
    const int m = static_cast<int>(bricks.size());
    // Every sign pattern on every subset of at most n bricks.
    for (int mask = 0; mask < (1 << m); ++mask) {
      if (__builtin_popcount(mask) > s.n) continue;
      for (int signs = mask;; signs = (signs - 1) & mask) {
        SemibrickPair p;
        for (int i = 0; i < m; ++i)
          if (mask >> i & 1) (signs >> i & 1 ? p.negative : p.positive).push_back(bricks[i]);
        p = canonical(p);
        if (is_semibrick_pair(a, p).ok) {
          bool by_def = is_mutation_compatible(a, p).ok;
          INFO(s.name(), " ", format_pair(p));
          CHECK(completable_by_containment(maximal, p) == by_def);
          CHECK(is_completable(s, p).completable == by_def);
        }
        if (signs == 0) break;
      }
    }
  }
}

TEST_CASE("both characterizations of 2-smc agree") {
  for (const auto& s : oracle::test_algebras()) {
    for (const auto& p : all_smc(s)) {
      auto v = is_2smc(s, p);
      CHECK(v.agree());
      CHECK(v.value());
    }
    Nakayama a(s);
    SemibrickPair simples;
    for (int i = 1; i <= s.n; ++i) simples.positive.push_back({i, 1});
    CHECK(is_2smc(s, simples).value());
    simples.positive.pop_back();
    CHECK_FALSE(is_2smc(s, simples).by_rank);
    CHECK(is_2smc(s, simples).agree());
  }
}

TEST_CASE("mutation follows the Hasse arrows") {
  for (const auto& s : oracle::test_algebras()) {
    Nakayama a(s);
    const auto& lat = build_lattice_cached(a);
    auto all = all_smc(s);
    for (const auto& arrow : lat.arrows) {
      auto x = x_of(lat, arrow.from);
      auto y = mutate_smc(s, x, arrow.label);
      INFO(s.name(), " ", format_pair(x), " at ", format_indec(arrow.label));
      CHECK(y == x_of(lat, arrow.to));
      CHECK(y != x);
      CHECK(right_mutate_smc(s, y, arrow.label, all) == x);
    }
    for (const auto& p : all)
      for (auto sp : p.positive) CHECK_NOTHROW(mutate_smc(s, p, sp));
  }
}

TEST_CASE("mutation rejects a negative brick") {
  AlgebraSpec a2{2, {2, 1}};
  CHECK_THROWS_AS(mutate_smc(a2, SemibrickPair{{{1, 1}}, {{1, 2}}}, Indec{1, 2}), std::invalid_argument);
}

TEST_CASE("pattern and pair conversions are inverse") {
  for (const auto& s : oracle::test_algebras())
    for (const auto& p : enumerate_maximal_patterns(s)) CHECK(pattern_of(pair_of(p)) == p);
}

}
