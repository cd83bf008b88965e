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

#include "tsprops/identity_engine.hpp"

#include <algorithm>  // for sort, binary_search, max
#include <cstdint>    // for int8_t
#include <map>        // for map
#include <utility>    // for pair, move
#include <vector>     // for vector

namespace tsprops {

  namespace {

    using Slot = std::size_t;

    // One constraint src * w == tgt on the word substituted for a variable.
    struct Coordinate {
      Slot src;
      Slot tgt;
      bool idempotent;  // also tgt * w == tgt
    };

    struct Variable {
      std::vector<Coordinate> coords;
      Slot                    ready = 0;  // last slot the coordinates use
      bool                    occurs = false;
    };

    class Search {
     public:
      Search(GeneratorSet const&  gens,
             QuasiIdentity const& qid,
             std::uint64_t        budget)
          : _gens(gens),
            _n(gens.degree()),
            _lhs(qid.lhs.size()),
            _rhs(qid.rhs.size()),
            _budget(budget),
            _vars(qid.variables),
            _memo(qid.variables),
            _reach1(_n * _n, false),
            _reach_fixed(_n * _n, -1) {
        auto const add = [this, &qid](std::vector<std::size_t> const& side,
                                      auto                            slot) {
          for (std::size_t j = 0; j < side.size(); ++j) {
            auto& v = _vars[side[j]];
            v.coords.push_back({slot(j), slot(j + 1), qid.idempotent[side[j]]});
            v.ready  = std::max({v.ready, slot(j), slot(j + 1)});
            v.occurs = true;
          }
        };
        add(qid.lhs, [](std::size_t j) { return j; });
        add(qid.rhs, [this](std::size_t j) { return j == 0 ? 0 : _lhs + j; });
        _assignment.assign(_lhs + _rhs + 1, 0);
        _ready.resize(_assignment.size());
        for (std::size_t i = 0; i < _vars.size(); ++i) {
          if (_vars[i].occurs) {
            _ready[_vars[i].ready].push_back(i);
          }
        }
        for (Point a = 0; a < _n; ++a) {
          for (auto code : reachable_tuples(_gens, TupleSpace(_n, 1, budget), {a})) {
            _reach1[a * _n + code] = true;
          }
        }
      }

      bool find() {
        return extend(0);
      }

      std::vector<Point> const& assignment() const noexcept {
        return _assignment;
      }

      // Distinct sources in increasing order with their targets; false on a
      // source needing two different targets.
      bool reduce(Variable const& v, Tuple& sources, Tuple& targets) const {
        std::vector<std::pair<Point, Point>> pairs;
        for (auto const& c : v.coords) {
          auto const s = _assignment[c.src], t = _assignment[c.tgt];
          pairs.emplace_back(s, t);
          if (c.idempotent) {
            pairs.emplace_back(t, t);
          }
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        sources.clear();
        targets.clear();
        for (auto const& [s, t] : pairs) {
          if (!sources.empty() && sources.back() == s) {
            return false;
          }
          sources.push_back(s);
          targets.push_back(t);
        }
        return true;
      }

      Variable const& variable(std::size_t i) const noexcept {
        return _vars[i];
      }

     private:
      bool pair_ok(Coordinate const& c) {
        auto const a = _assignment[c.src], b = _assignment[c.tgt];
        if (!c.idempotent) {
          return _reach1[a * _n + b];
        }
        auto& cached = _reach_fixed[a * _n + b];
        if (cached < 0) {
          TupleSpace const space(_n, 2, _budget);
          auto const       codes = reachable_tuples(_gens, space, {a, b});
          Point const      bb[2] = {b, b};
          cached = std::binary_search(codes.begin(), codes.end(), space.encode(bb));
        }
        return cached != 0;
      }

      bool variable_ok(Variable const& v) {
        Tuple sources, targets;
        if (!reduce(v, sources, targets)) {
          return false;
        }
        TupleSpace const space(_n, sources.size(), _budget);
        auto const       index = &v - _vars.data();
        auto [it, fresh]       = _memo[index].try_emplace(sources);
        if (fresh) {
          it->second = reachable_tuples(_gens, space, sources);
        }
        return std::binary_search(
            it->second.begin(), it->second.end(), space.encode(targets));
      }

      bool extend(Slot slot) {
        if (slot == _assignment.size()) {
          return true;
        }
        for (Point x = 0; x < _n; ++x) {
          _assignment[slot] = x;
          if (slot == _lhs + _rhs && _assignment[_lhs] == x) {
            continue;
          }
          if (!consistent(slot)) {
            continue;
          }
          if (extend(slot + 1)) {
            return true;
          }
        }
        return false;
      }

      bool consistent(Slot slot) {
        for (auto const& v : _vars) {
          for (auto const& c : v.coords) {
            if (std::max(c.src, c.tgt) == slot && !pair_ok(c)) {
              return false;
            }
          }
        }
        for (auto i : _ready[slot]) {
          if (!variable_ok(_vars[i])) {
            return false;
          }
        }
        return true;
      }

      GeneratorSet const& _gens;
      std::size_t         _n;
      std::size_t         _lhs;
      std::size_t         _rhs;
      std::uint64_t       _budget;
      std::vector<Variable>                               _vars;
      std::vector<std::map<Tuple, std::vector<std::uint64_t>>> _memo;
      std::vector<bool>                                   _reach1;
      std::vector<std::int8_t>                            _reach_fixed;
      std::vector<Point>                                  _assignment;
      std::vector<std::vector<std::size_t>>               _ready;
    };

  }  // namespace

  PropertyReport models(GeneratorSet const&  gens,
                        QuasiIdentity const& qid,
                        std::string          property,
                        std::uint64_t        state_budget) {
    qid.validate();
    PropertyReport r;
    r.property = std::move(property);
    r.engine   = Engine::structural;
    Search search(gens, qid, state_budget);
    if (!search.find()) {
      r.verdict = Verdict::True;
      return r;
    }
    r.verdict       = Verdict::False;
    auto const& b   = search.assignment();
    auto const  lhs = qid.lhs.size();
    Witness     w;
    w.kind = "quasi_identity_counterexample";
    w.points.assign(b.begin(), b.begin() + lhs + 1);
    w.points.push_back(b[0]);
    w.points.insert(w.points.end(), b.begin() + lhs + 1, b.end());
    for (std::size_t i = 0; i < qid.variables; ++i) {
      Word word = {0};
      if (search.variable(i).occurs) {
        Tuple sources, targets;
        search.reduce(search.variable(i), sources, targets);
        TupleSearchOptions options;
        options.state_budget = state_budget;
        word                 = *tuple_reachability(
            gens,
            sources,
            [&targets](std::span<const Point> t) {
              return std::equal(t.begin(), t.end(), targets.begin());
            },
            options);
      }
      auto value = gens.evaluate(word);
      if (qid.idempotent[i]) {
        value = idempotent_power(value);
      }
      w.words.push_back(std::move(word));
      w.elements.push_back(std::move(value));
    }
    w.note    = to_string(qid);
    r.message = "the assignment in the witness violates " + w.note
                + " at point " + std::to_string(b[0] + 1);
    r.witness = std::move(w);
    return r;
  }

  PropertyReport is_band(GeneratorSet const& gens) {
    return models(gens, preset("band"), "band");
  }

  PropertyReport idempotents_central(GeneratorSet const& gens) {
    return models(gens, preset("central_idempotents"), "idempotents-central");
  }

  PropertyReport idempotents_commute(GeneratorSet const& gens) {
    return models(gens, preset("commuting_idempotents"), "idempotents-commute");
  }

  PropertyReport is_orthodox(GeneratorSet const& gens) {
    return models(gens, preset("orthodox"), "orthodox");
  }

}  // namespace tsprops
