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

// All left and right identities of S.
//
// A left identity must act on the kernel classes of S as the identity, so
// it is a power of a generator whose induced action on the classes is a
// permutation; the power is the lcm of that permutation's cycle lengths.
// Right identities are found the same way from the action on [n]S.

#ifndef TSPROPS_IDENTITIES_ENUM_HPP_
#define TSPROPS_IDENTITIES_ENUM_HPP_

#include <vector>  // for vector

#include "core.hpp"    // for GeneratorSet, Transformation, Word
#include "report.hpp"  // for PropertyReport

namespace tsprops {

  struct ElementWithWord {
    Transformation element;
    Word           word;

    friend bool operator==(ElementWithWord const&, ElementWithWord const&)
        = default;
  };

  // Sorted by element, without repetitions.
  std::vector<ElementWithWord> left_identities(GeneratorSet const& gens);
  std::vector<ElementWithWord> right_identities(GeneratorSet const& gens);

  // The lists as reports: TRUE iff nonempty; witness kind "left_identities"
  // or "right_identities" listing every identity in elements and words.
  PropertyReport left_identities_report(GeneratorSet const& gens);
  PropertyReport right_identities_report(GeneratorSet const& gens);

}  // namespace tsprops

#endif  // TSPROPS_IDENTITIES_ENUM_HPP_
