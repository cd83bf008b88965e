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

#include "tsprops/graph.hpp"

#include <algorithm>  // for sort, lower_bound, max
#include <numeric>    // for iota
#include <string>     // for to_string

namespace tsprops {

  Digraph::Digraph(std::size_t n) : Digraph(n, [n] {
                                      PointSet all(n);
                                      std::iota(all.begin(), all.end(), Point(0));
                                      return all;
                                    }()) {}

  Digraph::Digraph(std::size_t n, PointSet vertices)
      : _successors(n), _member(n, false), _vertices(std::move(vertices)) {
    std::sort(_vertices.begin(), _vertices.end());
    _vertices.erase(std::unique(_vertices.begin(), _vertices.end()),
                    _vertices.end());
    for (auto v : _vertices) {
      if (v >= n) {
        throw PreconditionError("vertex " + std::to_string(v + 1)
                                + " out of range");
      }
      _member[v] = true;
    }
  }

  void Digraph::add_edge(Point from, Point to, std::size_t label) {
    if (!has_vertex(from) || !has_vertex(to)) {
      throw PreconditionError("edge endpoint is not a vertex");
    }
    auto& succ = _successors[from];
    auto  it   = std::lower_bound(
        succ.begin(), succ.end(), to, [](Edge const& e, Point v) {
          return e.to < v;
        });
    if (it != succ.end() && it->to == to) {
      it->label = std::min(it->label, label);
    } else {
      succ.insert(it, Edge{to, label});
    }
  }

  std::vector<std::pair<Point, Point>> Digraph::edges() const {
    std::vector<std::pair<Point, Point>> result;
    for (auto v : _vertices) {
      for (auto const& e : _successors[v]) {
        result.emplace_back(v, e.to);
      }
    }
    return result;
  }

  bool Digraph::has_self_loop() const {
    for (auto v : _vertices) {
      for (auto const& e : _successors[v]) {
        if (e.to == v) {
          return true;
        }
      }
    }
    return false;
  }

  Digraph transformation_graph(GeneratorSet const&            gens,
                               std::optional<PointSet> const& restrict) {
    Digraph g = restrict ? Digraph(gens.degree(), *restrict)
                         : Digraph(gens.degree());
    for (auto p : g.vertices()) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto q = gens[i][p];
        if (g.has_vertex(q)) {
          g.add_edge(p, q, i);
        }
      }
    }
    return g;
  }

  Partition undirected_components(Digraph const& g) {
    auto const               n = g.id_bound();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t(0));
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (auto [from, to] : g.edges()) {
      auto a = find(from), b = find(to);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t v = 0; v < n; ++v) {
      labels[v] = find(v);
    }
    return Partition(std::move(labels));
  }

  std::optional<Cycle> find_cycle(Digraph const& g, CycleMode mode) {
    enum class Colour { white, grey, black };
    auto const          n = g.id_bound();
    std::vector<Colour> colour(n, Colour::white);
    // Stack of (vertex, next successor position) plus the label used to
    // enter each vertex on the current path.
    std::vector<std::pair<Point, std::size_t>> stack;
    std::vector<std::size_t>                   entry_label;

    for (auto root : g.vertices()) {
      if (colour[root] != Colour::white) {
        continue;
      }
      stack.assign({{root, 0}});
      entry_label.assign({0});
      colour[root] = Colour::grey;
      while (!stack.empty()) {
        auto& [v, pos] = stack.back();
        auto succ      = g.successors(v);
        if (pos == succ.size()) {
          colour[v] = Colour::black;
          stack.pop_back();
          entry_label.pop_back();
          continue;
        }
        Edge const e = succ[pos++];
        if (e.to == v && mode == CycleMode::ignore_self_loops) {
          continue;
        }
        if (colour[e.to] == Colour::grey) {
          Cycle cycle;
          std::size_t start = 0;
          while (stack[start].first != e.to) {
            ++start;
          }
          for (std::size_t i = start; i < stack.size(); ++i) {
            cycle.points.push_back(stack[i].first);
            if (i > start) {
              cycle.labels.push_back(entry_label[i]);
            }
          }
          cycle.points.push_back(e.to);
          cycle.labels.push_back(e.label);
          return cycle;
        }
        if (colour[e.to] == Colour::white) {
          colour[e.to] = Colour::grey;
          stack.emplace_back(e.to, 0);
          entry_label.push_back(e.label);
        }
      }
    }
    return std::nullopt;
  }

  std::size_t longest_path_length(Digraph const& g) {
    if (has_cycle(g, CycleMode::ignore_self_loops)) {
      throw PreconditionError("longest_path_length: graph has a cycle");
    }
    auto const               n = g.id_bound();
    std::vector<std::size_t> longest(n, 0);
    std::vector<bool>        done(n, false);
    // Memoized depth first search; recursion depth is bounded by n.
    std::function<std::size_t(Point)> visit = [&](Point v) -> std::size_t {
      if (done[v]) {
        return longest[v];
      }
      std::size_t best = 0;
      for (auto const& e : g.successors(v)) {
        if (e.to != v) {
          best = std::max(best, 1 + visit(e.to));
        }
      }
      done[v]    = true;
      longest[v] = best;
      return best;
    };
    std::size_t result = 0;
    for (auto v : g.vertices()) {
      result = std::max(result, visit(v));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // TupleSpace
  ////////////////////////////////////////////////////////////////////////

  TupleSpace::TupleSpace(std::size_t n, std::size_t d, std::uint64_t budget)
      : _n(n), _d(d), _size(1) {
    if (n == 0) {
      throw PreconditionError("tuple space over zero points");
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (_size > budget / n) {
        throw BudgetExceeded("state space " + std::to_string(n) + "^"
                             + std::to_string(d) + " exceeds the budget of "
                             + std::to_string(budget) + " states");
      }
      _size *= n;
    }
    if (_size > budget) {
      throw BudgetExceeded("state space exceeds the budget of "
                           + std::to_string(budget) + " states");
    }
  }

  std::uint64_t TupleSpace::encode(std::span<const Point> t) const noexcept {
    std::uint64_t code = 0;
    for (auto x : t) {
      code = code * _n + x;
    }
    return code;
  }

  void TupleSpace::decode(std::uint64_t code, std::span<Point> out) const noexcept {
    for (std::size_t i = _d; i-- > 0;) {
      out[i] = static_cast<Point>(code % _n);
      code /= _n;
    }
  }

  Tuple TupleSpace::decode(std::uint64_t code) const {
    Tuple t(_d);
    decode(code, t);
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Breadth-first search over tuples
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Node {
      std::uint64_t code;
      std::size_t   parent;  // index into the node list; self for roots
      std::size_t   label;
      std::size_t   root;  // index of the source
    };

    void check_tuple(GeneratorSet const& gens, Tuple const& t) {
      if (t.empty()) {
        throw PreconditionError("tuples must have dimension >= 1");
      }
      for (auto x : t) {
        if (x >= gens.degree()) {
          throw PreconditionError("tuple coordinate out of range");
        }
      }
    }

    Word word_to(std::vector<Node> const& nodes, std::size_t i) {
      Word w;
      while (nodes[i].parent != i) {
        w.push_back(nodes[i].label);
        i = nodes[i].parent;
      }
      std::reverse(w.begin(), w.end());
      return w;
    }

  }  // namespace

  std::optional<TupleWitness>
  multi_tuple_reachability(GeneratorSet const&       gens,
                           std::vector<Tuple>        sources,
                           TuplePredicate const&     target,
                           TupleSearchOptions const& options) {
    if (sources.empty()) {
      return std::nullopt;
    }
    if (options.min_length > 1) {
      throw PreconditionError("min_length must be 0 or 1");
    }
    auto const d = sources.front().size();
    for (auto const& s : sources) {
      check_tuple(gens, s);
      if (s.size() != d) {
        throw PreconditionError("sources of mixed dimension");
      }
    }
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

    TupleSpace const  space(gens.degree(), d, options.state_budget);
    std::vector<bool> visited(space.size(), false);
    std::vector<Node> nodes;
    nodes.reserve(sources.size());

    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (options.min_length == 0 && target(sources[i])) {
        return TupleWitness{sources[i], {}, sources[i]};
      }
      auto const code = space.encode(sources[i]);
      nodes.push_back(Node{code, nodes.size(), 0, i});
      if (options.min_length == 0) {
        visited[code] = true;
      }
    }

    Tuple current(d), next(d);
    for (std::size_t head = 0; head < nodes.size(); ++head) {
      space.decode(nodes[head].code, current);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto const& a = gens[g];
        for (std::size_t c = 0; c < d; ++c) {
          next[c] = a[current[c]];
        }
        auto const code = space.encode(next);
        if (visited[code]) {
          continue;
        }
        visited[code] = true;
        nodes.push_back(Node{code, head, g, nodes[head].root});
        if (target(next)) {
          auto const last = nodes.size() - 1;
          return TupleWitness{
              sources[nodes[last].root], word_to(nodes, last), next};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Word> tuple_reachability(GeneratorSet const&       gens,
                                         Tuple const&              start,
                                         TuplePredicate const&     target,
                                         TupleSearchOptions const& options) {
    auto result = multi_tuple_reachability(gens, {start}, target, options);
    if (!result) {
      return std::nullopt;
    }
    return std::move(result->word);
  }

  std::vector<std::uint64_t> reachable_tuples(GeneratorSet const& gens,
                                              TupleSpace const&   space,
                                              Tuple const&        start) {
    check_tuple(gens, start);
    auto const                 d = space.dimension();
    std::vector<std::uint64_t> queue;
    std::vector<bool>          visited(space.size(), false);
    Tuple                      current = start, next(d);
    // The start itself is only included when reached by a nonempty word.
    std::size_t head = 0;
    bool        root = true;
    while (root || head < queue.size()) {
      if (!root) {
        space.decode(queue[head++], current);
      }
      root = false;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto const& a = gens[g];
        for (std::size_t c = 0; c < d; ++c) {
          next[c] = a[current[c]];
        }
        auto const code = space.encode(next);
        if (!visited[code]) {
          visited[code] = true;
          queue.push_back(code);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  Tuple act(GeneratorSet const& gens, Tuple t, Word const& w) {
    for (auto& x : t) {
      x = gens.act(x, w);
    }
    return t;
  }

}  // namespace tsprops
