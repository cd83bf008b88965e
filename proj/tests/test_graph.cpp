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
#include "tsprops/graph.hpp"

using namespace tsprops;
using namespace tsprops::test;

namespace {

  using EdgeList = std::vector<std::pair<Point, Point>>;

  EdgeList one_based_edges(Digraph const& g) {
    EdgeList out;
    for (auto [p, q] : g.edges()) {
      out.emplace_back(p + 1, q + 1);
    }
    return out;
  }

  bool on_diagonal(std::span<const Point> t) {
    return t[0] == t[1];
  }

  // Every word of the given length in lexicographic order.
  std::vector<Word> words_of_length(std::size_t k, std::size_t len) {
    std::vector<Word> out;
    Word              w(len, 0);
    while (true) {
      out.push_back(w);
      std::size_t i = len;
      while (i > 0) {
        --i;
        if (++w[i] < k) {
          break;
        }
        w[i] = 0;
        if (i == 0) {
          return out;
        }
      }
      if (len == 0) {
        return out;
      }
    }
  }

}  // namespace

TEST_CASE("transformation_graph", "[graph]") {
  CHECK(one_based_edges(transformation_graph(G({{2, 3, 1}})))
        == EdgeList{{1, 2}, {2, 3}, {3, 1}});
  CHECK(one_based_edges(transformation_graph(G({{1, 1, 2}})))
        == EdgeList{{1, 1}, {2, 1}, {3, 2}});
  CHECK(one_based_edges(transformation_graph(G({{1, 1, 2}}), P({2, 3})))
        == EdgeList{{3, 2}});
}

TEST_CASE("undirected_components", "[graph]") {
  Digraph a(3);
  a.add_edge(0, 1);
  CHECK(undirected_components(a).classes()
        == std::vector<PointSet>{P({1, 2}), P({3})});
  Digraph b(3);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(2, 0);
  CHECK(undirected_components(b).number_of_classes() == 1);
  Digraph c(2);
  CHECK(undirected_components(c).number_of_classes() == 2);
}

TEST_CASE("has_cycle", "[graph]") {
  Digraph loop(1);
  loop.add_edge(0, 0);
  CHECK_FALSE(has_cycle(loop, CycleMode::ignore_self_loops));
  CHECK(has_cycle(loop, CycleMode::strict));
  Digraph two(2);
  two.add_edge(0, 1);
  two.add_edge(1, 0);
  auto c = find_cycle(two, CycleMode::ignore_self_loops);
  REQUIRE(c);
  CHECK(c->points == std::vector<Point>{0, 1, 0});
}

TEST_CASE("strict cycles are tolerant cycles or self-loops", "[graph][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto const n = 1 + rng() % 5;
    Digraph    g(n);
    auto const m = rng() % (n * n + 1);
    for (std::size_t e = 0; e < m; ++e) {
      g.add_edge(static_cast<Point>(rng() % n), static_cast<Point>(rng() % n));
    }
    REQUIRE(has_cycle(g, CycleMode::strict)
            == (has_cycle(g, CycleMode::ignore_self_loops) || g.has_self_loop()));
  }
}

TEST_CASE("longest_path_length", "[graph]") {
  Digraph g(4);
  g.add_edge(3, 2);
  g.add_edge(2, 1);
  g.add_edge(1, 1);
  CHECK(longest_path_length(g) == 2);
  g.add_edge(1, 3);
  CHECK_THROWS_AS(longest_path_length(g), PreconditionError);
}

TEST_CASE("tuple_reachability", "[graph]") {
  auto in = [](Point target) {
    return [target](std::span<const Point> t) { return t[0] == target; };
  };
  CHECK(tuple_reachability(G({{2, 3, 1}}), {0}, in(2)) == W({1, 1}));
  CHECK(tuple_reachability(G({{1, 1, 2}}), {1, 2}, on_diagonal) == W({1, 1}));
  CHECK_FALSE(tuple_reachability(G({{2, 3, 1}}), {0, 1}, on_diagonal));
  TupleSearchOptions zero;
  zero.min_length = 0;
  CHECK(tuple_reachability(G({{2, 3, 1}}), {2}, in(2), zero) == Word{});
  CHECK(tuple_reachability(G({{2, 3, 1}}), {2}, in(2)) == W({1, 1, 1}));
}

TEST_CASE("multi_tuple_reachability", "[graph]") {
  auto const gens = G({{1, 1, 2}});
  auto       hit  = multi_tuple_reachability(gens, {{1, 2}}, on_diagonal);
  REQUIRE(hit);
  CHECK(hit->word == W({1, 1}));
  CHECK(hit->target == Tuple{0, 0});
  TupleSearchOptions zero;
  zero.min_length = 0;
  auto same = multi_tuple_reachability(gens, {{1, 1}}, on_diagonal, zero);
  REQUIRE(same);
  CHECK(same->word.empty());
  CHECK_FALSE(multi_tuple_reachability(gens, {}, on_diagonal));
}

TEST_CASE("tuple state budget", "[graph]") {
  TupleSearchOptions tiny;
  tiny.state_budget = 8;
  CHECK_THROWS_AS(
      tuple_reachability(G({{2, 3, 1}}), {0, 1}, on_diagonal, tiny),
      BudgetExceeded);
}

TEST_CASE("reachability witnesses are canonical", "[graph][property]") {
  // Compared with exhaustive word enumeration on small instances.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto const n    = 2 + rng() % 3;
    auto const k    = 1 + rng() % 2;
    auto const gens = random_generators(rng, n, k);
    Tuple      start{static_cast<Point>(rng() % n), static_cast<Point>(rng() % n)};
    auto const w = tuple_reachability(gens, start, on_diagonal);
    std::optional<Word> brute;
    for (std::size_t len = 1; len <= n * n && !brute; ++len) {
      for (auto const& cand : words_of_length(k, len)) {
        auto const t = act(gens, start, cand);
        if (t[0] == t[1]) {
          brute = cand;
          break;
        }
      }
    }
    REQUIRE(w == brute);
    if (w) {
      auto const t = act(gens, start, *w);
      REQUIRE(t[0] == t[1]);
    }
  }
}

TEST_CASE("reachable_tuples", "[graph]") {
  auto const gens = G({{2, 3, 1}});
  TupleSpace space(3, 1, kDefaultStateBudget);
  CHECK(reachable_tuples(gens, space, {0}) == std::vector<std::uint64_t>{0, 1, 2});
  auto const constant = G({{1, 1, 1}});
  CHECK(reachable_tuples(constant, space, {2}) == std::vector<std::uint64_t>{0});
}
