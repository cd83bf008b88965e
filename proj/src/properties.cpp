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

#include "tsprops/properties.hpp"

#include <algorithm>  // for find
#include <set>        // for set

#include "tsprops/fo_checks.hpp"        // for is_commutative, is_group, ...
#include "tsprops/identities_enum.hpp"  // for left_identities_report, ...
#include "tsprops/identity_engine.hpp"  // for is_band, is_orthodox, ...
#include "tsprops/nl_checks.hpp"        // for has_zero, is_nilpotent, ...
#include "tsprops/pspace_search.hpp"    // for is_regular_semigroup, ...

namespace tsprops {

  std::vector<std::string> const& property_names() {
    return oracle_properties();
  }

  bool is_property(std::string_view name) {
    auto const& names = property_names();
    return std::find(names.begin(), names.end(), name) != names.end();
  }

  bool is_oracle_only(std::string_view name) {
    return name == "aperiodic";
  }

  namespace {

    PropertyReport undecided(std::string_view property,
                             Engine           engine,
                             std::string      why) {
      PropertyReport r;
      r.property = std::string(property);
      r.verdict  = Verdict::Undecided;
      r.engine   = engine;
      r.message  = std::move(why);
      return r;
    }

    PropertyReport dispatch(GeneratorSet const& gens,
                            std::string_view    p,
                            CheckLimits const&  limits) {
      auto const budget = limits.state_budget;
      if (p == "commutative") {
        return is_commutative(gens);
      } else if (p == "semilattice") {
        return is_semilattice(gens);
      } else if (p == "group") {
        return is_group(gens);
      } else if (p == "left-zero") {
        return has_left_zero(gens);
      } else if (p == "right-zero") {
        return has_right_zero(gens);
      } else if (p == "zero") {
        return has_zero(gens);
      } else if (p == "nilpotent") {
        return is_nilpotent(gens);
      } else if (p == "r-trivial") {
        return is_r_trivial(gens);
      } else if (p == "band") {
        return is_band(gens);
      } else if (p == "idempotents-commute") {
        return idempotents_commute(gens);
      } else if (p == "idempotents-central") {
        return idempotents_central(gens);
      } else if (p == "orthodox") {
        return is_orthodox(gens);
      } else if (p == "completely-regular") {
        return is_completely_regular(gens, budget);
      } else if (p == "clifford") {
        return is_clifford(gens, budget);
      } else if (p == "regular") {
        if (is_commutative(gens).holds()) {
          return is_regular_commutative(gens, budget);
        }
        return is_regular_semigroup(gens, limits.element_cap);
      } else if (p == "inverse") {
        return is_inverse_semigroup(gens, limits.element_cap);
      } else if (p == "left-identities") {
        return left_identities_report(gens);
      } else if (p == "right-identities") {
        return right_identities_report(gens);
      } else if (p == "aperiodic") {
        return oracle_check(gens, p, limits.element_cap);
      }
      throw UnknownProperty("unknown property '" + std::string(p) + "'");
    }

  }  // namespace

  PropertyReport structural_check(GeneratorSet const& gens,
                                  std::string_view    property,
                                  CheckLimits const&  limits) {
    if (!is_property(property)) {
      throw UnknownProperty("unknown property '" + std::string(property)
                            + "'");
    }
    try {
      return dispatch(gens, property, limits);
    } catch (BudgetExceeded const& e) {
      return undecided(property, Engine::structural, e.what());
    }
  }

  PropertyReport oracle_check(GeneratorSet const& gens,
                              std::string_view    property,
                              std::size_t         cap) {
    if (!is_property(property)) {
      throw UnknownProperty("unknown property '" + std::string(property)
                            + "'");
    }
    try {
      return definitional_check(ElementTable::enumerate(gens, cap), property);
    } catch (BudgetExceeded const& e) {
      return undecided(property, Engine::oracle, e.what());
    }
  }

  bool reports_agree(PropertyReport const& a,
                     PropertyReport const& b,
                     std::string*          why) {
    if (a.verdict != b.verdict) {
      if (why) {
        *why = "verdicts differ: " + to_string(a.verdict) + " vs "
               + to_string(b.verdict);
      }
      return false;
    }
    if (a.property == "left-identities" || a.property == "right-identities") {
      auto const elements = [](PropertyReport const& r) {
        std::set<Transformation> s;
        if (r.witness) {
          s.insert(r.witness->elements.begin(), r.witness->elements.end());
        }
        return s;
      };
      if (elements(a) != elements(b)) {
        if (why) {
          *why = "the identity lists differ";
        }
        return false;
      }
    }
    return true;
  }

}  // namespace tsprops
