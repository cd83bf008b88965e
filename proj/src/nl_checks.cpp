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

#include "tsprops/nl_checks.hpp"

#include <algorithm>  // for find_if
#include <map>        // for map
#include <utility>    // for move, pair

#include "tsprops/fo_checks.hpp"        // for is_commutative
#include "tsprops/identity_engine.hpp"  // for idempotents_commute

namespace tsprops {

  namespace {

    PropertyReport report(char const* property, bool holds) {
      PropertyReport r;
      r.property = property;
      r.verdict  = verdict_of(holds);
      r.engine   = Engine::structural;
      return r;
    }

    void append(Word& w, Word const& tail) {
      w.insert(w.end(), tail.begin(), tail.end());
    }

    bool on_diagonal(std::span<const Point> t) {
      return t[0] == t[1];
    }

    std::string point_name(Point q) {
      return std::to_string(q + 1);
    }

  }  // namespace

  PropertyReport has_right_zero(GeneratorSet const& gens) {
    auto const n     = gens.degree();
    auto const comps = undirected_components(transformation_graph(gens));
    std::map<std::pair<Point, Point>, Word> collapse;
    for (Point p = 0; p < n; ++p) {
      for (Point q = p + 1; q < n; ++q) {
        if (!comps.same_class(p, q)) {
          continue;
        }
        auto w = tuple_reachability(gens, {p, q}, on_diagonal);
        if (!w) {
          auto r    = report("right-zero", false);
          r.witness = Witness{"non_collapsible_pair", {p, q}, {}, {}, {}};
          r.message = "points " + point_name(p) + " and " + point_name(q)
                      + " are connected but never collapsed";
          return r;
        }
        collapse.emplace(std::make_pair(p, q), std::move(*w));
      }
    }
    // Each step merges two image points of one component, so the image
    // ends with a single point per component and r is then a right zero.
    Word word  = {0};
    auto value = gens[0];
    while (true) {
      auto const im    = image(value);
      bool       found = false;
      for (std::size_t i = 0; i < im.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < im.size() && !found; ++j) {
          if (comps.same_class(im[i], im[j])) {
            auto const& tail = collapse.at({im[i], im[j]});
            append(word, tail);
            value = value * gens.evaluate(tail);
            found = true;
          }
        }
      }
      if (!found) {
        break;
      }
    }
    auto r    = report("right-zero", true);
    r.witness = Witness{"right_zero", {}, {}, {word}, {value}};
    return r;
  }

  PropertyReport has_left_zero(GeneratorSet const& gens) {
    auto const n     = gens.degree();
    auto const fixed = fixed_points(gens);
    auto const in_fixed
        = [&fixed](std::span<const Point> t) { return contains(fixed, t[0]); };
    std::vector<Word> into_fixed(n);
    for (Point q = 0; q < n; ++q) {
      auto w = tuple_reachability(gens, {q}, in_fixed);
      if (!w) {
        auto r    = report("left-zero", false);
        r.witness = Witness{"stuck_point", {q}, {}, {}, {}};
        r.message = "point " + point_name(q)
                    + " never reaches a point fixed by every generator";
        return r;
      }
      into_fixed[q] = std::move(*w);
    }
    Word word  = {0};
    auto value = gens[0];
    while (true) {
      auto const im = image(value);
      auto const it = std::find_if(im.begin(), im.end(), [&fixed](Point q) {
        return !contains(fixed, q);
      });
      if (it == im.end()) {
        break;
      }
      append(word, into_fixed[*it]);
      value = value * gens.evaluate(into_fixed[*it]);
    }
    auto r    = report("left-zero", true);
    r.witness = Witness{"left_zero", {}, {}, {word}, {value}};
    return r;
  }

  PropertyReport has_zero(GeneratorSet const& gens) {
    auto left = has_left_zero(gens);
    if (!left.holds()) {
      left.property = "zero";
      return left;
    }
    auto right = has_right_zero(gens);
    if (!right.holds()) {
      right.property = "zero";
      return right;
    }
    // A left zero and a right zero coincide, so the left zero is the zero.
    auto r          = std::move(left);
    r.property      = "zero";
    r.witness->kind = "zero";
    return r;
  }

  namespace {

    Digraph outside_zero_image(GeneratorSet const& gens) {
      auto const fixed = fixed_points(gens);
      PointSet   rest;
      for (Point q = 0; q < gens.degree(); ++q) {
        if (!contains(fixed, q)) {
          rest.push_back(q);
        }
      }
      return transformation_graph(gens, rest);
    }

  }  // namespace

  PropertyReport is_nilpotent(GeneratorSet const& gens) {
    auto zero = has_zero(gens);
    if (!zero.holds()) {
      zero.property = "nilpotent";
      zero.message  = "no zero element: " + zero.message;
      return zero;
    }
    auto const g = outside_zero_image(gens);
    if (auto c = find_cycle(g, CycleMode::strict)) {
      auto r    = report("nilpotent", false);
      r.message = "cycle through point " + point_name(c->points[0])
                  + " avoids the zero's image";
      r.witness = Witness{"cycle_outside_zero_image",
                          std::move(c->points),
                          std::move(c->labels),
                          {},
                          {}};
      return r;
    }
    auto r          = std::move(zero);
    r.property      = "nilpotent";
    r.witness->kind = "nilpotent";
    r.witness->bound = 1 + longest_path_length(g);
    return r;
  }

  std::size_t nilpotency_degree_upper_bound(GeneratorSet const& gens) {
    auto const r = is_nilpotent(gens);
    if (!r.holds()) {
      throw PreconditionError("the semigroup is not nilpotent");
    }
    return r.witness->bound;
  }

  PropertyReport is_r_trivial(GeneratorSet const& gens) {
    auto c = find_cycle(transformation_graph(gens), CycleMode::ignore_self_loops);
    if (!c) {
      return report("r-trivial", true);
    }
    auto const& labels = c->labels;
    auto const  omega  = idempotent_power_exponent(gens.evaluate(labels));
    Word        e, f, back(labels.begin() + 1, labels.end());
    for (std::size_t i = 0; i < omega; ++i) {
      append(e, labels);
      if (i + 1 < omega) {
        append(back, labels);
      }
    }
    f = e;
    f.push_back(labels[0]);
    auto r    = report("r-trivial", false);
    r.message = "cycle of length " + std::to_string(labels.size())
                + " through point " + point_name(c->points[0]);
    Witness w{"r_class_cycle", c->points, {labels[0]}, {e, f, back}, {}};
    w.elements = {gens.evaluate(e), gens.evaluate(f)};
    r.witness  = std::move(w);
    return r;
  }

  PropertyReport is_completely_regular(GeneratorSet const& gens,
                                       std::uint64_t       state_budget) {
    auto const         n = gens.degree();
    TupleSearchOptions options;
    options.state_budget = state_budget;
    // (v, u) has a witness iff (u, v) has one, with p and q swapped.
    for (Point u = 0; u < n; ++u) {
      for (Point v = u + 1; v < n; ++v) {
        std::vector<Tuple> sources;
        for (Point p = 0; p < n; ++p) {
          for (Point q = 0; q < n; ++q) {
            sources.push_back({p, q, u, v});
          }
        }
        auto const hit = multi_tuple_reachability(
            gens,
            std::move(sources),
            [u, v](std::span<const Point> t) {
              return t[0] == u && t[1] == v && t[2] == t[3];
            },
            options);
        if (hit) {
          auto r    = report("completely-regular", false);
          r.message = "an element collapses points " + point_name(u) + " and "
                      + point_name(v) + " of its image";
          Witness w{"not_permutation_on_image",
                    {hit->source[0], hit->source[1], u, v},
                    {},
                    {hit->word},
                    {gens.evaluate(hit->word)}};
          r.witness = std::move(w);
          return r;
        }
      }
    }
    return report("completely-regular", true);
  }

  PropertyReport is_regular_commutative(GeneratorSet const& gens,
                                        std::uint64_t       state_budget) {
    if (!is_commutative(gens).holds()) {
      throw PreconditionError(
          "regularity through complete regularity needs a commutative "
          "semigroup");
    }
    auto r     = is_completely_regular(gens, state_budget);
    r.property = "regular";
    return r;
  }

  PropertyReport is_clifford(GeneratorSet const& gens,
                             std::uint64_t       state_budget) {
    auto r = is_completely_regular(gens, state_budget);
    if (r.holds()) {
      r = idempotents_commute(gens);
    }
    r.property = "clifford";
    return r;
  }

}  // namespace tsprops
