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

// Properties decided through reachability in the transformation graph or in
// its componentwise action on tuples of points.

#ifndef TSPROPS_NL_CHECKS_HPP_
#define TSPROPS_NL_CHECKS_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t

#include "core.hpp"    // for GeneratorSet
#include "graph.hpp"   // for kDefaultStateBudget
#include "report.hpp"  // for PropertyReport

namespace tsprops {

  // Every pair of points in one weakly connected component of the
  // transformation graph is collapsed by some element.  A TRUE report
  // carries a right zero (kind "right_zero", words[0]); a FALSE report the
  // pair (kind "non_collapsible_pair").
  PropertyReport has_right_zero(GeneratorSet const& gens);

  // Every point is sent into the common fixed points by some element.  TRUE
  // carries a left zero (kind "left_zero"); FALSE the point (kind
  // "stuck_point").
  PropertyReport has_left_zero(GeneratorSet const& gens);

  // Both of the above; TRUE carries the zero (kind "zero").
  PropertyReport has_zero(GeneratorSet const& gens);

  // A zero exists and the graph induced on the points outside the zero's
  // image is acyclic, self-loops included.  TRUE carries the zero and the
  // degree bound (kind "nilpotent", bound); FALSE either the failing
  // zero report or a cycle (kind "cycle_outside_zero_image").
  PropertyReport is_nilpotent(GeneratorSet const& gens);

  // One more than the longest path outside the zero's image.  Throws
  // PreconditionError unless S is nilpotent.
  std::size_t nilpotency_degree_upper_bound(GeneratorSet const& gens);

  // Every cycle of the transformation graph is a self-loop.  FALSE carries
  // the cycle and two distinct R-related elements (kind "r_class_cycle"):
  // words[0] evaluates to e, words[1] to f == e * a_{indices[0]}, and
  // f * words[2] == e.
  PropertyReport is_r_trivial(GeneratorSet const& gens);

  // No element collapses two points of its own image.  FALSE carries
  // (p, q, u, v) and w with p * w == u, q * w == v, u != v and u * w == v * w
  // (kind "not_permutation_on_image").
  PropertyReport is_completely_regular(
      GeneratorSet const& gens,
      std::uint64_t       state_budget = kDefaultStateBudget);

  // For commutative S regularity coincides with complete regularity.
  // Throws PreconditionError if S is not commutative.
  PropertyReport is_regular_commutative(
      GeneratorSet const& gens,
      std::uint64_t       state_budget = kDefaultStateBudget);

  // Completely regular with commuting idempotents.
  PropertyReport is_clifford(GeneratorSet const& gens,
                             std::uint64_t state_budget = kDefaultStateBudget);

}  // namespace tsprops

#endif  // TSPROPS_NL_CHECKS_HPP_
