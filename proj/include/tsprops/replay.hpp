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

// Independent verification of witnesses.
//
// Every witness kind emitted by the checkers and by the oracle is replayed
// here from its words and points alone: words must evaluate to the listed
// elements and the elements must exhibit the claimed certificate or
// violation.  Claims of non-existence (for example that no element
// collapses a pair) can only be confirmed against the full element table;
// without one only their checkable part is verified.
//
// Kinds and their fields (points and generator indices 0-based):
//
//   noncommuting_generators     indices {i, j}, points {q}
//   non_idempotent_generator    indices {i}, points {q}
//   group_image_mismatch        indices {i, j}, points {q}: q in im a_i \ im a_j
//   group_not_permutation_on_image
//                               indices {i}, points {p, q}
//   group_kernel_mismatch       indices {i, j}, points {p, q}
//   left_zero, right_zero, zero elements {z}
//   nilpotent                   elements {zero}, bound
//   non_collapsible_pair        points {p, q}            (table needed)
//   stuck_point                 points {q}               (table needed)
//   cycle_outside_zero_image    points (closed walk), indices (labels)
//   r_class_cycle               see is_r_trivial
//   not_permutation_on_image    points {p, q, u, v}, words {w}
//   quasi_identity_counterexample, identity_assignment
//                               elements (one per variable), note (the
//                               quasi-identity)
//   left_identities, right_identities
//                               elements (all of them)   (table for
//                                                         completeness)
//   non_regular_element         elements {s}             (table needed)
//   element_search              elements {t, s}, words {w}, note (mode)
//   and the element kinds of the oracle: noncommuting_elements,
//   non_idempotent_element, distinct_idempotents, identity_fails,
//   no_inverse_power, identity_element, nonzero_idempotent, r_related_pair,
//   noncommuting_idempotents, noncentral_idempotent, non_idempotent_product,
//   not_in_subgroup, two_inverses, nontrivial_group_power.

#ifndef TSPROPS_REPLAY_HPP_
#define TSPROPS_REPLAY_HPP_

#include <string>  // for string

#include "core.hpp"            // for GeneratorSet
#include "oracle.hpp"          // for ElementTable
#include "quasi_identity.hpp"  // for QuasiIdentity
#include "report.hpp"          // for PropertyReport

namespace tsprops {

  enum class ReplayStatus { verified, failed, not_applicable };

  struct ReplayResult {
    ReplayStatus status = ReplayStatus::not_applicable;
    std::string  detail;

    bool failed() const noexcept {
      return status == ReplayStatus::failed;
    }
  };

  // not_applicable when the report has no witness, or when the witness is
  // a pure non-existence claim and no table is given.  The quasi-identity
  // defaults to the one recorded in the witness note.
  ReplayResult replay(GeneratorSet const&   gens,
                      PropertyReport const& report,
                      ElementTable const*   table = nullptr,
                      QuasiIdentity const*  qid   = nullptr);

}  // namespace tsprops

#endif  // TSPROPS_REPLAY_HPP_
