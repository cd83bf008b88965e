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

using namespace tsprops;
using namespace tsprops::test;

TEST_CASE("compose acts on the right", "[core]") {
  CHECK(T({2, 3, 1}) * T({2, 3, 1}) == T({3, 1, 2}));
  CHECK(T({1, 1, 1}) * T({2, 2, 2}) == T({2, 2, 2}));
  CHECK(T({1, 1, 2}) * T({1, 1, 2}) == T({1, 1, 1}));
  CHECK_THROWS_AS(compose(T({1, 1}), T({1, 1, 1})), PreconditionError);
}

TEST_CASE("transformations reject bad maps", "[core]") {
  CHECK_THROWS_AS(T({1, 4, 2}), PreconditionError);
  CHECK_THROWS_AS(T({0, 1}), PreconditionError);
  CHECK_THROWS_AS(Transformation(std::vector<Point>{}), PreconditionError);
  CHECK_THROWS_AS(GeneratorSet(std::vector<Transformation>{}), PreconditionError);
  CHECK_THROWS_AS(GeneratorSet({T({1, 1}), T({1, 1, 1})}), PreconditionError);
}

TEST_CASE("image", "[core]") {
  CHECK(image(T({1, 1, 2})) == P({1, 2}));
  CHECK(image(T({2, 3, 1})) == P({1, 2, 3}));
  CHECK(image(T({2, 2, 2})) == P({2}));
}

TEST_CASE("kernel", "[core]") {
  auto k = kernel(G({{1, 1, 2}}));
  CHECK(k.number_of_classes() == 2);
  CHECK(k.classes() == std::vector<PointSet>{P({1, 2}), P({3})});
  CHECK(kernel(G({{2, 3, 1}})).number_of_classes() == 3);
  CHECK(kernel(G({{1, 1, 1}, {2, 2, 2}})).classes()
        == std::vector<PointSet>{P({1, 2, 3})});
  std::vector<Transformation> none;
  CHECK_THROWS_AS(kernel(none), PreconditionError);
}

TEST_CASE("is_idempotent", "[core]") {
  CHECK(is_idempotent(T({1, 1, 3})));
  CHECK_FALSE(is_idempotent(T({1, 1, 2})));
  CHECK(is_idempotent(T({1, 2, 3})));
}

TEST_CASE("idempotent_power_exponent against brute-force powers", "[core]") {
  auto brute = [](Transformation const& s) {
    std::size_t m = 1;
    auto        p = s;
    while (!is_idempotent(p)) {
      p = p * s;
      ++m;
    }
    return m;
  };
  CHECK(idempotent_power_exponent(T({2, 3, 1})) == brute(T({2, 3, 1})));
  CHECK(idempotent_power_exponent(T({2, 3, 1})) == 3);
  CHECK(idempotent_power_exponent(T({1, 1, 2})) == brute(T({1, 1, 2})));
  CHECK(idempotent_power_exponent(T({1, 1, 2})) == 2);
  CHECK(idempotent_power_exponent(T({1, 1, 3})) == 1);
  for (auto const& s : all_transformations(4)) {
    auto const m = idempotent_power_exponent(s);
    REQUIRE(m == brute(s));
    REQUIRE(is_idempotent(power(s, m)));
  }
}

TEST_CASE("quotient_action", "[core]") {
  auto q = quotient_action(G({{2, 2, 3}}));
  CHECK(q.classes.classes() == std::vector<PointSet>{P({1, 2}), P({3})});
  CHECK(q.action[0] == T({1, 2}));
  auto p = quotient_action(G({{2, 3, 1}}));
  CHECK(p.classes.number_of_classes() == 3);
  CHECK(p.action[0] == T({2, 3, 1}));
  auto c = quotient_action(G({{1, 1, 1}, {2, 2, 2}}));
  CHECK(c.classes.number_of_classes() == 1);
  CHECK(c.action[0] == T({1}));
  CHECK(c.action[1] == T({1}));
}

TEST_CASE("image_action", "[core]") {
  auto a = image_action(G({{1, 1, 2}}));
  CHECK(a.domain == P({1, 2}));
  CHECK(a.action[0] == T({1, 1}));
  auto b = image_action(G({{2, 3, 1}}));
  CHECK(b.domain == P({1, 2, 3}));
  CHECK(b.action[0] == T({2, 3, 1}));
  auto c = image_action(G({{1, 1, 1}, {2, 2, 2}}));
  CHECK(c.domain == P({1, 2}));
  CHECK(c.action[0] == T({1, 1}));
  CHECK(c.action[1] == T({2, 2}));
}

TEST_CASE("fixed_points", "[core]") {
  CHECK(fixed_points(G({{1, 1, 2}})) == P({1}));
  CHECK(fixed_points(G({{2, 3, 1}})).empty());
  CHECK(fixed_points(G({{1, 2, 3}})) == P({1, 2, 3}));
}

TEST_CASE("algebraic invariants on random maps", "[core][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto const n    = 1 + rng() % 6;
    auto const gens = random_generators(rng, n, 3);
    auto const &a = gens[0], &b = gens[1], &c = gens[2];
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(rank(a * b) <= std::min(rank(a), rank(b)));

    // ker{a,b} is the meet of ker a and ker b.
    auto const kab = kernel(std::vector<Transformation>{a, b});
    for (Point p = 0; p < n; ++p) {
      for (Point q = 0; q < n; ++q) {
        REQUIRE(kab.same_class(p, q) == (a[p] == a[q] && b[p] == b[q]));
      }
    }

    // The induced actions are homomorphisms.
    auto const  quotient = quotient_action(gens);
    auto const  img      = image_action(gens);
    auto const  ab       = a * b;
    auto const& cls      = quotient.classes;
    for (Point q = 0; q < n; ++q) {
      auto const via = quotient.action[1][quotient.action[0][cls.class_of(q)]];
      REQUIRE(via == cls.class_of(ab[q]));
    }
    for (std::size_t i = 0; i < img.domain.size(); ++i) {
      auto const via = img.action[1][img.action[0][static_cast<Point>(i)]];
      REQUIRE(img.domain[via] == ab[img.domain[i]]);
    }
  }
}

TEST_CASE("partition renumbers by first occurrence", "[core]") {
  Partition p({7, 3, 7, 9});
  CHECK(p.number_of_classes() == 3);
  CHECK(p.class_of(0) == 0);
  CHECK(p.class_of(1) == 1);
  CHECK(p.class_of(3) == 2);
  CHECK(p.same_class(0, 2));
}

TEST_CASE("generator sets evaluate words", "[core]") {
  auto gens = G({{2, 3, 1}, {2, 1, 3}});
  CHECK(gens.evaluate(W({1, 2})) == T({2, 3, 1}) * T({2, 1, 3}));
  CHECK(gens.act(0, W({1, 1})) == 2);
  CHECK(gens.act(0, {}) == 0);
  CHECK(gens.name(1) == "a2");
  CHECK_THROWS_AS(gens.evaluate({}), PreconditionError);
  CHECK(to_string(T({2, 3, 1})) == "[2 3 1]");
  CHECK(to_string(W({1, 1})) == "[1 1]");
}
