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

// Searches over the elements of S for regularizers, weak inverses and
// inverses of a given transformation.  The element set can be exponential
// in n, so every search takes an element cap and reports UNDECIDED when the
// cap is reached first.

#ifndef TSPROPS_PSPACE_SEARCH_HPP_
#define TSPROPS_PSPACE_SEARCH_HPP_

#include <cstddef>   // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view

#include "core.hpp"             // for GeneratorSet, Transformation
#include "identities_enum.hpp"  // for ElementWithWord
#include "oracle.hpp"           // for kDefaultElementCap
#include "report.hpp"           // for PropertyReport, Verdict

namespace tsprops {

  struct ElementSearch {
    Verdict                        verdict = Verdict::Undecided;
    std::optional<ElementWithWord> found;     // set iff verdict is True
    std::size_t                    explored;  // elements generated
  };

  // The first t of S in canonical word order with s t s == s.  s must have
  // degree n but need not lie in S.
  ElementSearch find_regularizer(GeneratorSet const&   gens,
                                 Transformation const& s,
                                 std::size_t           cap = kDefaultElementCap);

  // ... with t s t == t.
  ElementSearch find_weak_inverse(GeneratorSet const&   gens,
                                  Transformation const& s,
                                  std::size_t cap = kDefaultElementCap);

  // ... with both.
  ElementSearch find_inverse(GeneratorSet const&   gens,
                             Transformation const& s,
                             std::size_t           cap = kDefaultElementCap);

  enum class SearchMode { regularizer, weak_inverse, inverse };

  // "regularizer", "weak-inverse", "inverse"; throws PreconditionError.
  SearchMode  search_mode(std::string_view name);
  std::string to_string(SearchMode mode);

  ElementSearch find_element(GeneratorSet const&   gens,
                             Transformation const& s,
                             SearchMode            mode,
                             std::size_t           cap = kDefaultElementCap);

  // The search as a report named after the mode.  A TRUE report carries
  // kind "element_search": elements {t, s}, words {word of t}, note the
  // mode.
  PropertyReport element_search_report(GeneratorSet const&   gens,
                                       Transformation const& s,
                                       SearchMode            mode,
                                       std::size_t cap = kDefaultElementCap);

  // s^(2 omega - 1) with omega minimal; always a weak inverse of s.
  struct PoweredElement {
    Transformation element;
    std::size_t    exponent;
  };
  PoweredElement canonical_weak_inverse(Transformation const& s);

  // Every element of S has a regularizer in S.  UNDECIDED past the cap;
  // FALSE carries the first non-regular element (kind
  // "non_regular_element").
  PropertyReport is_regular_semigroup(GeneratorSet const& gens,
                                      std::size_t cap = kDefaultElementCap);

  // Regular with commuting idempotents.
  PropertyReport is_inverse_semigroup(GeneratorSet const& gens,
                                      std::size_t cap = kDefaultElementCap);

}  // namespace tsprops

#endif  // TSPROPS_PSPACE_SEARCH_HPP_
