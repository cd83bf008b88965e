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

// Transformation graphs and breadth-first reachability over points and over
// d-tuples of points under the componentwise action of a generator set.

#ifndef TSPROPS_GRAPH_HPP_
#define TSPROPS_GRAPH_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <optional>    // for optional
#include <span>        // for span
#include <utility>     // for pair
#include <vector>      // for vector

#include "core.hpp"  // for GeneratorSet, Partition, Point, Word

namespace tsprops {

  struct Edge {
    Point       to;
    std::size_t label;  // least generator index realizing the edge

    friend bool operator==(Edge const&, Edge const&) = default;
  };

  // Directed graph on a subset of the vertex ids 0..n-1.  Successor lists
  // are kept sorted by target with one entry per target.
  class Digraph {
   public:
    explicit Digraph(std::size_t n);
    Digraph(std::size_t n, PointSet vertices);

    // Throws PreconditionError unless both endpoints are vertices.
    void add_edge(Point from, Point to, std::size_t label = 0);

    std::size_t id_bound() const noexcept {
      return _successors.size();
    }
    PointSet const& vertices() const noexcept {
      return _vertices;
    }
    bool has_vertex(Point v) const noexcept {
      return v < _member.size() && _member[v];
    }
    std::span<const Edge> successors(Point v) const noexcept {
      return _successors[v];
    }
    std::vector<std::pair<Point, Point>> edges() const;
    bool                                 has_self_loop() const;

   private:
    std::vector<std::vector<Edge>> _successors;
    std::vector<bool>              _member;
    PointSet                       _vertices;
  };

  // Edge p -> q iff some generator maps p to q; with a restriction only
  // edges between restricted points are kept (induced subgraph).
  Digraph transformation_graph(GeneratorSet const&            gens,
                               std::optional<PointSet> const& restrict = {});

  // Weakly connected components.  Ids outside the vertex set are singletons.
  Partition undirected_components(Digraph const& g);

  enum class CycleMode { strict, ignore_self_loops };

  // A closed walk: points.front() == points.back(), and
  // labels[i] realizes points[i] -> points[i + 1].
  struct Cycle {
    std::vector<Point>       points;
    std::vector<std::size_t> labels;
  };

  // Depth first from the least vertex; the first back edge found is
  // reported.  In ignore_self_loops mode only cycles of length >= 2 count.
  std::optional<Cycle> find_cycle(Digraph const& g, CycleMode mode);

  inline bool has_cycle(Digraph const& g, CycleMode mode) {
    return find_cycle(g, mode).has_value();
  }

  // Number of edges on a longest path of an acyclic graph (self-loops are
  // ignored).  Throws PreconditionError on a cycle of length >= 2.
  std::size_t longest_path_length(Digraph const& g);

  ////////////////////////////////////////////////////////////////////////
  // Tuple reachability
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::uint64_t kDefaultStateBudget = 100'000'000;

  using Tuple = std::vector<Point>;

  // Mixed-radix encoding of [n]^d.
  class TupleSpace {
   public:
    TupleSpace(std::size_t n, std::size_t d, std::uint64_t budget);

    std::size_t degree() const noexcept {
      return _n;
    }
    std::size_t dimension() const noexcept {
      return _d;
    }
    std::uint64_t size() const noexcept {
      return _size;
    }
    std::uint64_t encode(std::span<const Point> t) const noexcept;
    void          decode(std::uint64_t code, std::span<Point> out) const noexcept;
    Tuple         decode(std::uint64_t code) const;

   private:
    std::size_t   _n;
    std::size_t   _d;
    std::uint64_t _size;
  };

  struct TupleSearchOptions {
    std::size_t   min_length   = 1;
    std::uint64_t state_budget = kDefaultStateBudget;
  };

  using TuplePredicate = std::function<bool(std::span<const Point>)>;

  struct TupleWitness {
    Tuple source;
    Word  word;
    Tuple target;
  };

  // Breadth-first search from all sources at once.  Returns the witness
  // minimal by (word length, source lexicographically, word
  // lexicographically).  Throws BudgetExceeded if n^d exceeds the budget.
  std::optional<TupleWitness>
  multi_tuple_reachability(GeneratorSet const&     gens,
                           std::vector<Tuple>      sources,
                           TuplePredicate const&   target,
                           TupleSearchOptions const& options = {});

  // Shortest, then lexicographically least word w with start * w a target.
  std::optional<Word> tuple_reachability(GeneratorSet const&       gens,
                                         Tuple const&              start,
                                         TuplePredicate const&     target,
                                         TupleSearchOptions const& options = {});

  // Codes (in space) of all tuples start * w for nonempty words w, sorted.
  std::vector<std::uint64_t> reachable_tuples(GeneratorSet const& gens,
                                              TupleSpace const&   space,
                                              Tuple const&        start);

  // Tuple * w componentwise.
  Tuple act(GeneratorSet const& gens, Tuple t, Word const& w);

}  // namespace tsprops

#endif  // TSPROPS_GRAPH_HPP_
