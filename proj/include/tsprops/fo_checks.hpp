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

// Properties decided by bounded quantification over generators and points.

#ifndef TSPROPS_FO_CHECKS_HPP_
#define TSPROPS_FO_CHECKS_HPP_

#include "core.hpp"    // for GeneratorSet
#include "report.hpp"  // for PropertyReport

namespace tsprops {

  // S is commutative iff its generators commute pairwise.
  PropertyReport is_commutative(GeneratorSet const& gens);

  // Every generator idempotent and S commutative.
  PropertyReport is_semilattice(GeneratorSet const& gens);

  // S is a group iff all generators share one image X, each permutes X,
  // and all share one kernel.
  PropertyReport is_group(GeneratorSet const& gens);

}  // namespace tsprops

#endif  // TSPROPS_FO_CHECKS_HPP_
