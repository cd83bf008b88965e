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

#include "tsprops/reductions.hpp"

#include <algorithm>  // for is_sorted, adjacent_find
#include <deque>      // for deque

namespace tsprops {

  void DFA::validate() const {
    if (states == 0) {
      throw PreconditionError("a DFA needs at least one state");
    }
    if (initial >= states) {
      throw PreconditionError("initial state out of range");
    }
    if (!std::is_sorted(final.begin(), final.end())
        || std::adjacent_find(final.begin(), final.end()) != final.end()) {
      throw PreconditionError("final states must be sorted and distinct");
    }
    if (!final.empty() && final.back() >= states) {
      throw PreconditionError("final state out of range");
    }
    if (letters.empty()) {
      throw PreconditionError("a DFA needs at least one letter");
    }
    for (auto const& a : letters) {
      if (a.degree() != states) {
        throw PreconditionError("letter degree differs from the state count");
      }
    }
    if (!names.empty() && names.size() != letters.size()) {
      throw PreconditionError("expected one name per letter");
    }
  }

  void InputDigraph::validate() const {
    if (vertices == 0) {
      throw PreconditionError("a digraph needs at least one vertex");
    }
    for (auto const& [v, w] : edges) {
      if (v >= vertices || w >= vertices) {
        throw PreconditionError("edge endpoint out of range");
      }
    }
  }

  bool language_is_empty(DFA const& d) {
    d.validate();
    std::vector<bool> seen(d.states, false);
    std::deque<Point> queue = {d.initial};
    seen[d.initial]         = true;
    while (!queue.empty()) {
      auto const q = queue.front();
      queue.pop_front();
      if (contains(d.final, q)) {
        return false;
      }
      for (auto const& a : d.letters) {
        if (!seen[a[q]]) {
          seen[a[q]] = true;
          queue.push_back(a[q]);
        }
      }
    }
    return true;
  }

  namespace {

    std::vector<std::string> letter_names(DFA const& d) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < d.letters.size(); ++i) {
        names.push_back(d.names.empty() ? "a" + std::to_string(i + 1)
                                        : d.names[i]);
      }
      return names;
    }

  }  // namespace

  GeneratorSet dfa_emptiness_to_zero(DFA const& d) {
    d.validate();
    auto const                  n    = d.states;
    Point const                 sink = n;
    std::vector<Transformation> gens;
    for (auto const& a : d.letters) {
      std::vector<Point> images(a.images().begin(), a.images().end());
      images.push_back(sink);
      gens.emplace_back(std::move(images));
    }
    std::vector<Point> b(n + 1, d.initial), c(n + 1);
    b[sink] = sink;
    for (Point q = 0; q <= n; ++q) {
      c[q] = (q == sink || contains(d.final, q)) ? sink : q;
    }
    gens.emplace_back(std::move(b));
    gens.emplace_back(std::move(c));
    auto names = letter_names(d);
    names.push_back("b");
    names.push_back("c");
    return GeneratorSet(std::move(gens), std::move(names));
  }

  GeneratorSet dfa_emptiness_to_nilpotent(DFA const& d) {
    d.validate();
    if (contains(d.final, d.initial)) {
      throw PreconditionError(
          "the initial state is final, so the language is trivially "
          "nonempty");
    }
    auto const                  n    = d.states;
    Point const                 zero = static_cast<Point>(n * n);
    auto const                  at   = [n](Point q, std::size_t c) {
      return static_cast<Point>(q * n + c);
    };
    auto const                  base = letter_names(d);
    std::vector<Transformation> gens;
    std::vector<std::string>    names;
    for (std::size_t i = 0; i < d.letters.size(); ++i) {
      auto const& a = d.letters[i];
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Point> images(n * n + 1, zero);
        for (Point q = 0; q < n; ++q) {
          if (j + 1 < n && !contains(d.final, q)) {
            images[at(q, j)] = at(a[q], j + 1);
          }
        }
        gens.emplace_back(std::move(images));
        names.push_back(base[i] + "_" + std::to_string(j + 1));
      }
    }
    std::vector<Point> b(n * n + 1, zero);
    for (Point q = 0; q < n; ++q) {
      if (contains(d.final, q)) {
        for (std::size_t c = 0; c < n; ++c) {
          b[at(q, c)] = at(d.initial, 0);
        }
      }
    }
    gens.emplace_back(std::move(b));
    names.push_back("b");
    return GeneratorSet(std::move(gens), std::move(names));
  }

  GeneratorSet digraph_to_semigroup(InputDigraph const& g) {
    g.validate();
    if (g.edges.empty()) {
      throw PreconditionError("the digraph has no edges");
    }
    auto const                  n    = g.vertices;
    Point const                 sink = static_cast<Point>(n);
    std::vector<Transformation> gens;
    std::vector<std::string>    names;
    for (auto const& [v, w] : g.edges) {
      std::vector<Point> images(n + 1, sink);
      images[v] = w;
      gens.emplace_back(std::move(images));
      names.push_back("e" + std::to_string(v + 1) + "_"
                      + std::to_string(w + 1));
    }
    return GeneratorSet(std::move(gens), std::move(names));
  }

  namespace {

    struct Union {
      std::vector<std::size_t>    offset;  // first point of each DFA
      std::size_t                 sink = 0;
      std::vector<Transformation> letters;
      std::vector<std::string>    names;
      Transformation              b;
    };

    Union disjoint_union(std::vector<DFA> const& ds) {
      if (ds.empty()) {
        throw PreconditionError("expected at least one DFA");
      }
      Union u;
      for (auto const& d : ds) {
        d.validate();
        if (d.final.size() != 1) {
          throw PreconditionError("every DFA needs exactly one final state");
        }
        if (d.letters.size() != ds.front().letters.size()) {
          throw PreconditionError("the DFAs must share one alphabet");
        }
        u.offset.push_back(u.sink);
        u.sink += d.states;
      }
      auto const size = u.sink + 1;
      for (std::size_t i = 0; i < ds.front().letters.size(); ++i) {
        std::vector<Point> images(size, static_cast<Point>(u.sink));
        for (std::size_t j = 0; j < ds.size(); ++j) {
          for (Point q = 0; q < ds[j].states; ++q) {
            images[u.offset[j] + q]
                = static_cast<Point>(u.offset[j] + ds[j].letters[i][q]);
          }
        }
        u.letters.emplace_back(std::move(images));
      }
      u.names = letter_names(ds.front());
      std::vector<Point> b(size, static_cast<Point>(u.sink));
      for (std::size_t j = 0; j < ds.size(); ++j) {
        b[u.offset[j] + ds[j].final[0]]
            = static_cast<Point>(u.offset[j] + ds[j].initial);
      }
      u.b = Transformation(std::move(b));
      return u;
    }

  }  // namespace

  RegularInstance dfa_intersection_to_regular(std::vector<DFA> const& ds) {
    auto u = disjoint_union(ds);
    u.letters.push_back(u.b);
    u.names.push_back("b");
    auto const target = u.letters.size() - 1;
    return {GeneratorSet(std::move(u.letters), std::move(u.names)), target};
  }

  WeakInverseInstance
  dfa_intersection_to_weak_inverse(std::vector<DFA> const& ds) {
    auto               u = disjoint_union(ds);
    std::vector<Point> c(u.sink + 1, static_cast<Point>(u.sink));
    for (std::size_t j = 0; j < ds.size(); ++j) {
      for (Point q = 0; q < ds[j].states; ++q) {
        c[u.offset[j] + q] = static_cast<Point>(u.offset[j] + ds[j].initial);
      }
    }
    u.letters.emplace_back(std::move(c));
    u.names.push_back("c");
    return {GeneratorSet(std::move(u.letters), std::move(u.names)),
            std::move(u.b)};
  }

}  // namespace tsprops
