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

#include "tsprops/identities_enum.hpp"

#include <algorithm>  // for sort, unique
#include <numeric>    // for lcm
#include <utility>    // for move

namespace tsprops {

  namespace {

    std::size_t cycle_lcm(Transformation const& perm) {
      std::size_t       m = 1;
      std::vector<bool> seen(perm.degree(), false);
      for (Point q = 0; q < perm.degree(); ++q) {
        std::size_t len = 0;
        for (Point x = q; !seen[x]; x = perm[x]) {
          seen[x] = true;
          ++len;
        }
        if (len > 0) {
          m = std::lcm(m, len);
        }
      }
      return m;
    }

    std::vector<ElementWithWord> candidates(GeneratorSet const& gens,
                                            GeneratorSet const& action) {
      std::vector<ElementWithWord> result;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!is_permutation(action[i])) {
          continue;
        }
        auto const m = cycle_lcm(action[i]);
        auto       e = power(gens[i], m);
        if (!is_idempotent(e)) {
          throw Error("internal: identity candidate is not idempotent");
        }
        result.push_back({std::move(e), Word(m, i)});
      }
      std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
        return a.element < b.element
               || (a.element == b.element && a.word < b.word);
      });
      result.erase(std::unique(result.begin(),
                               result.end(),
                               [](auto const& a, auto const& b) {
                                 return a.element == b.element;
                               }),
                   result.end());
      return result;
    }

    PropertyReport as_report(char const*                         property,
                             char const*                         kind,
                             std::vector<ElementWithWord> const& found) {
      PropertyReport r;
      r.property = property;
      r.verdict  = verdict_of(!found.empty());
      r.engine   = Engine::structural;
      Witness w;
      w.kind = kind;
      for (auto const& x : found) {
        w.elements.push_back(x.element);
        w.words.push_back(x.word);
      }
      r.witness = std::move(w);
      r.message = std::to_string(found.size())
                  + (found.size() == 1 ? " element" : " elements");
      return r;
    }

  }  // namespace

  std::vector<ElementWithWord> left_identities(GeneratorSet const& gens) {
    return candidates(gens, quotient_action(gens).action);
  }

  std::vector<ElementWithWord> right_identities(GeneratorSet const& gens) {
    return candidates(gens, image_action(gens).action);
  }

  PropertyReport left_identities_report(GeneratorSet const& gens) {
    return as_report("left-identities", "left_identities", left_identities(gens));
  }

  PropertyReport right_identities_report(GeneratorSet const& gens) {
    return as_report(
        "right-identities", "right_identities", right_identities(gens));
  }

}  // namespace tsprops
