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

// Decides whether S models a quasi-identity  x_i = x_i^2 (i in E) => u = v.
//
// A counterexample is a point p_1 = q_1 together with boundary points
// p_1 .. p_{l+1} (the trajectory of p_1 under u) and q_1 .. q_{r+1} (under
// v) with p_{l+1} != q_{r+1}, such that every variable x_i admits a
// nonempty word w_i moving each boundary point before an occurrence of x_i
// to the boundary point after it.  For x_i in E the word must also fix the
// points after its occurrences; substituting w_i^omega for x_i then gives an
// idempotent value with the same effect on the boundary.  Each variable is
// an independent reachability question in [n]^d, so the search is
// polynomial for a fixed quasi-identity.

#ifndef TSPROPS_IDENTITY_ENGINE_HPP_
#define TSPROPS_IDENTITY_ENGINE_HPP_

#include <cstdint>  // for uint64_t
#include <string>   // for string

#include "core.hpp"            // for GeneratorSet
#include "graph.hpp"           // for kDefaultStateBudget
#include "quasi_identity.hpp"  // for QuasiIdentity
#include "report.hpp"          // for PropertyReport

namespace tsprops {

  // Witness kind "quasi_identity_counterexample": points holds p_1 ..
  // p_{l+1} followed by q_1 .. q_{r+1}; words[i] is w_i; elements[i] is the
  // value substituted for x_i (w_i^omega when x_i is in E).  Throws
  // BudgetExceeded if a reachability space exceeds the budget.
  PropertyReport models(GeneratorSet const&  gens,
                        QuasiIdentity const& qid,
                        std::string          property     = "identity",
                        std::uint64_t        state_budget = kDefaultStateBudget);

  PropertyReport is_band(GeneratorSet const& gens);
  PropertyReport idempotents_central(GeneratorSet const& gens);
  PropertyReport idempotents_commute(GeneratorSet const& gens);
  PropertyReport is_orthodox(GeneratorSet const& gens);

}  // namespace tsprops

#endif  // TSPROPS_IDENTITY_ENGINE_HPP_
