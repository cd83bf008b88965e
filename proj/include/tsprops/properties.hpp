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

// Property names shared by the CLI, the cross-checker and the tests, and the
// dispatch from a name to the structural checker or to the oracle.

#ifndef TSPROPS_PROPERTIES_HPP_
#define TSPROPS_PROPERTIES_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "core.hpp"    // for GeneratorSet
#include "graph.hpp"   // for kDefaultStateBudget
#include "oracle.hpp"  // for ElementTable, kDefaultElementCap
#include "report.hpp"  // for PropertyReport

namespace tsprops {

  struct CheckLimits {
    std::size_t   element_cap  = kDefaultElementCap;
    std::uint64_t state_budget = kDefaultStateBudget;
  };

  // commutative, semilattice, group, left-zero, right-zero, zero, nilpotent,
  // r-trivial, band, idempotents-commute, idempotents-central, orthodox,
  // completely-regular, clifford, regular, inverse, left-identities,
  // right-identities, aperiodic.
  std::vector<std::string> const& property_names();
  bool                            is_property(std::string_view name);

  // Decided only by enumeration (aperiodic).
  bool is_oracle_only(std::string_view name);

  // Runs the checker for the property; oracle-only properties run the
  // oracle.  Exceeded limits give UNDECIDED.  Throws UnknownProperty.
  PropertyReport structural_check(GeneratorSet const& gens,
                                  std::string_view    property,
                                  CheckLimits const&  limits = {});

  // Enumerates S and decides from the definition; UNDECIDED past the cap.
  PropertyReport oracle_check(GeneratorSet const& gens,
                              std::string_view    property,
                              std::size_t         cap = kDefaultElementCap);

  // Equal verdicts, and for the identity lists equal sets of elements.  On
  // disagreement the reason is stored in why, if given.
  bool reports_agree(PropertyReport const& a,
                     PropertyReport const& b,
                     std::string*          why = nullptr);

}  // namespace tsprops

#endif  // TSPROPS_PROPERTIES_HPP_
