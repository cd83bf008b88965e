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

#include "tsprops/pspace_search.hpp"

#include <functional>     // for function
#include <unordered_set>  // for unordered_set
#include <utility>        // for move
#include <vector>         // for vector

#include "tsprops/identity_engine.hpp"  // for idempotents_commute

namespace tsprops {

  namespace {

    // Breadth first over S; elements are tested in the order they are
    // discovered, which is canonical word order.
    ElementSearch
    search(GeneratorSet const&                              gens,
           Transformation const&                            s,
           std::size_t                                      cap,
           std::function<bool(Transformation const&)> const& accept) {
      if (s.degree() != gens.degree()) {
        throw PreconditionError("target degree differs from the generators'");
      }
      ElementSearch                      result;
      std::vector<ElementWithWord>       queue;
      std::unordered_set<Transformation> seen;
      auto const visit = [&](Transformation t, Word w) {
        if (!seen.insert(t).second) {
          return false;
        }
        if (accept(t)) {
          result.verdict = Verdict::True;
          result.found   = ElementWithWord{std::move(t), std::move(w)};
          return true;
        }
        queue.push_back({std::move(t), std::move(w)});
        return false;
      };
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (visit(gens[g], {g}) || seen.size() > cap) {
          result.explored = seen.size();
          return result;
        }
      }
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
          auto w = queue[head].word;
          w.push_back(g);
          if (visit(queue[head].element * gens[g], std::move(w))
              || seen.size() > cap) {
            result.explored = seen.size();
            return result;
          }
        }
      }
      result.verdict  = Verdict::False;
      result.explored = seen.size();
      return result;
    }

  }  // namespace

  ElementSearch find_regularizer(GeneratorSet const&   gens,
                                 Transformation const& s,
                                 std::size_t           cap) {
    return search(gens, s, cap, [&s](auto const& t) { return s * t * s == s; });
  }

  ElementSearch find_weak_inverse(GeneratorSet const&   gens,
                                  Transformation const& s,
                                  std::size_t           cap) {
    return search(gens, s, cap, [&s](auto const& t) { return t * s * t == t; });
  }

  ElementSearch find_inverse(GeneratorSet const&   gens,
                             Transformation const& s,
                             std::size_t           cap) {
    return search(gens, s, cap, [&s](auto const& t) {
      return s * t * s == s && t * s * t == t;
    });
  }

  SearchMode search_mode(std::string_view name) {
    if (name == "regularizer") {
      return SearchMode::regularizer;
    } else if (name == "weak-inverse") {
      return SearchMode::weak_inverse;
    } else if (name == "inverse") {
      return SearchMode::inverse;
    }
    throw PreconditionError("unknown search mode '" + std::string(name) + "'");
  }

  std::string to_string(SearchMode mode) {
    switch (mode) {
      case SearchMode::regularizer:
        return "regularizer";
      case SearchMode::weak_inverse:
        return "weak-inverse";
      case SearchMode::inverse:
        break;
    }
    return "inverse";
  }

  ElementSearch find_element(GeneratorSet const&   gens,
                             Transformation const& s,
                             SearchMode            mode,
                             std::size_t           cap) {
    switch (mode) {
      case SearchMode::regularizer:
        return find_regularizer(gens, s, cap);
      case SearchMode::weak_inverse:
        return find_weak_inverse(gens, s, cap);
      case SearchMode::inverse:
        break;
    }
    return find_inverse(gens, s, cap);
  }

  PropertyReport element_search_report(GeneratorSet const&   gens,
                                       Transformation const& s,
                                       SearchMode            mode,
                                       std::size_t           cap) {
    auto const     result = find_element(gens, s, mode, cap);
    PropertyReport r;
    r.property = to_string(mode);
    r.verdict  = result.verdict;
    r.engine   = Engine::structural;
    if (result.found) {
      r.witness = Witness{"element_search",
                          {},
                          {},
                          {result.found->word},
                          {result.found->element, s}};
      r.witness->note = r.property;
      r.message = "found " + to_string(result.found->element) + " after "
                  + std::to_string(result.explored) + " elements";
    } else if (result.verdict == Verdict::False) {
      r.message = "NONE among all " + std::to_string(result.explored)
                  + " elements";
    } else {
      r.message = "UNDECIDED: more than " + std::to_string(cap) + " elements";
    }
    return r;
  }

  PoweredElement canonical_weak_inverse(Transformation const& s) {
    auto const m = 2 * idempotent_power_exponent(s) - 1;
    return {power(s, m), m};
  }

  PropertyReport is_regular_semigroup(GeneratorSet const& gens,
                                      std::size_t         cap) {
    PropertyReport r;
    r.property = "regular";
    r.engine   = Engine::structural;
    std::optional<ElementTable> table;
    try {
      table = ElementTable::enumerate(gens, cap);
    } catch (BudgetExceeded const&) {
      r.verdict = Verdict::Undecided;
      r.message = "more than " + std::to_string(cap) + " elements";
      return r;
    }
    for (std::size_t i = 0; i < table->size(); ++i) {
      auto const& s     = table->element(i);
      bool        found = false;
      for (std::size_t j = 0; j < table->size() && !found; ++j) {
        found = (s * table->element(j) * s == s);
      }
      if (!found) {
        r.verdict = Verdict::False;
        r.witness = Witness{
            "non_regular_element", {}, {}, {table->word(i)}, {s}};
        r.message = to_string(s) + " has no regularizer in S";
        return r;
      }
    }
    r.verdict = Verdict::True;
    return r;
  }

  PropertyReport is_inverse_semigroup(GeneratorSet const& gens,
                                      std::size_t         cap) {
    auto r = is_regular_semigroup(gens, cap);
    if (r.holds()) {
      r = idempotents_commute(gens);
    }
    r.property = "inverse";
    return r;
  }

}  // namespace tsprops
