//
// tsprops - decision procedures for finite transformation semigroups
// Copyright (C) 2026 tsprops contributors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "tsprops/crosscheck.hpp"
#include "tsprops/pspace_search.hpp"

using namespace tsprops;
using namespace tsprops::test;

TEST_CASE("find_regularizer", "[search]") {
  auto r = find_regularizer(G({{2, 3, 1}}), T({2, 3, 1}));
  REQUIRE(r.found);
  CHECK(r.verdict == Verdict::True);
  auto const s = T({2, 3, 1});
  CHECK(s * r.found->element * s == s);
  CHECK(find_regularizer(G({{2, 3, 1}}), s).found->element == T({3, 1, 2}));
  auto none = find_regularizer(G({{1, 1, 2}}), T({1, 1, 2}));
  CHECK(none.verdict == Verdict::False);
  CHECK_FALSE(none.found);
  CHECK(find_regularizer(G({{1, 1, 3}}), T({1, 1, 3})).found->element
        == T({1, 1, 3}));
}

TEST_CASE("find_weak_inverse", "[search]") {
  CHECK(find_weak_inverse(G({{2, 3, 1}}), T({2, 3, 1})).found->element
        == T({3, 1, 2}));
  CHECK(find_weak_inverse(G({{1, 1, 2}}), T({1, 1, 2})).found->element
        == T({1, 1, 1}));
}

TEST_CASE("find_inverse", "[search]") {
  CHECK(find_inverse(G({{2, 3, 1}}), T({2, 3, 1})).found->element
        == T({3, 1, 2}));
  CHECK(find_inverse(G({{1, 1, 2}}), T({1, 1, 2})).verdict == Verdict::False);
  CHECK(find_inverse(G({{1, 1, 3}}), T({1, 1, 3})).found->element
        == T({1, 1, 3}));
}

TEST_CASE("searches stop at the cap", "[search]") {
  auto const s5 = G({{2, 3, 4, 5, 1}, {2, 1, 3, 4, 5}});
  // No permutation is a weak inverse of a map of rank 4.
  auto r = find_weak_inverse(s5, T({1, 1, 2, 3, 4}), 10);
  CHECK(r.verdict == Verdict::Undecided);
  CHECK(find_weak_inverse(s5, T({1, 1, 2, 3, 4})).verdict == Verdict::False);
  CHECK(is_regular_semigroup(s5, 10).verdict == Verdict::Undecided);
}

TEST_CASE("search modes", "[search]") {
  CHECK(search_mode("weak-inverse") == SearchMode::weak_inverse);
  CHECK(to_string(SearchMode::inverse) == "inverse");
  CHECK_THROWS_AS(search_mode("left"), PreconditionError);
  auto r = element_search_report(G({{2, 3, 1}}), T({2, 3, 1}),
                                 SearchMode::regularizer);
  CHECK(r.holds());
  CHECK(r.witness->kind == "element_search");
}

TEST_CASE("canonical_weak_inverse", "[search]") {
  auto a = canonical_weak_inverse(T({2, 3, 1}));
  CHECK(a.exponent == 5);
  CHECK(a.element == T({3, 1, 2}));
  auto b = canonical_weak_inverse(T({1, 1, 2}));
  CHECK(b.exponent == 3);
  CHECK(b.element == T({1, 1, 1}));
  // The exponent omega - 1 fails here: s s s != s.
  auto const s = T({1, 1, 2});
  CHECK(s * s * s != s);
  auto c = canonical_weak_inverse(T({1, 1, 3}));
  CHECK(c.exponent == 1);
  CHECK(c.element == T({1, 1, 3}));
}

TEST_CASE("canonical weak inverse is a weak inverse on all of T4",
          "[search][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& s : all_transformations(n)) {
      auto const t = canonical_weak_inverse(s).element;
      REQUIRE(t * s * t == t);
    }
  }
}

TEST_CASE("is_regular_semigroup and is_inverse_semigroup", "[search]") {
  CHECK(is_regular_semigroup(G({{2, 3, 1}, {2, 1, 3}})).holds());
  auto r = is_regular_semigroup(G({{1, 1, 2}}));
  CHECK_FALSE(r.holds());
  CHECK(r.witness->elements[0] == T({1, 1, 2}));
  CHECK(is_regular_semigroup(G({{1, 1, 1}, {2, 2, 2}})).holds());
  CHECK(is_inverse_semigroup(G({{2, 3, 1}})).holds());
  CHECK_FALSE(is_inverse_semigroup(G({{1, 1, 1}, {2, 2, 2}})).holds());
  CHECK(is_inverse_semigroup(G({{1, 1, 3}})).holds());
}

TEST_CASE("searches agree with re-enumeration", "[search][property]") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    auto const n     = 1 + rng() % 4;
    auto const gens  = random_generators(rng, n, 1 + rng() % 2);
    auto const table = ElementTable::enumerate(gens);
    auto const s     = random_generators(rng, n, 1)[0];
    bool reg = false, weak = false, inv = false;
    for (std::size_t i = 0; i < table.size(); ++i) {
      auto const& t = table.element(i);
      reg  = reg || s * t * s == s;
      weak = weak || t * s * t == t;
      inv  = inv || (s * t * s == s && t * s * t == t);
    }
    auto const fr = find_regularizer(gens, s);
    auto const fw = find_weak_inverse(gens, s);
    auto const fi = find_inverse(gens, s);
    REQUIRE(fr.found.has_value() == reg);
    REQUIRE(fw.found.has_value() == weak);
    REQUIRE(fi.found.has_value() == inv);
    if (fr.found) {
      REQUIRE(gens.evaluate(fr.found->word) == fr.found->element);
      REQUIRE(s * fr.found->element * s == s);
    }
    if (fi.found) {
      REQUIRE(gens.evaluate(fi.found->word) == fi.found->element);
      REQUIRE(fr.found);
    }
    // A regular element of S has an inverse in S.
    if (table.index_of(s) && reg) {
      REQUIRE(inv);
    }
    REQUIRE(is_regular_semigroup(gens).holds()
            == definitional_check(table, "regular").holds());
    REQUIRE(is_inverse_semigroup(gens).holds()
            == definitional_check(table, "inverse").holds());
  }
}
