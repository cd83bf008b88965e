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

// Structural checkers against the oracle over exhaustive or seeded random
// families of generator sets.  Also replays every witness against the
// element table and checks the weak-inverse and nilpotency-degree bounds on
// each instance.

#ifndef TSPROPS_CROSSCHECK_HPP_
#define TSPROPS_CROSSCHECK_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <map>      // for map
#include <random>   // for mt19937_64
#include <string>   // for string
#include <vector>   // for vector

#include <json.hpp>  // for nlohmann::json

#include "core.hpp"    // for GeneratorSet
#include "report.hpp"  // for PropertyReport

namespace tsprops {

  struct CrosscheckOptions {
    // Exhaustive: every list of 1..max_generators maps of degree
    // max_degree.  Random: samples instances of degree 1..max_degree with
    // 1..max_generators generators.
    bool          exhaustive     = false;
    std::size_t   max_degree     = 3;
    std::size_t   max_generators = 2;
    std::size_t   samples        = 100;
    std::uint64_t seed           = 42;
    // Instances with more elements are redrawn (random) or skipped
    // (exhaustive) and counted.
    std::size_t              oracle_cap = 50000;
    std::vector<std::string> properties;  // empty: every structural one
    std::size_t              max_reported = 20;
  };

  struct PropertyTally {
    std::size_t true_count    = 0;
    std::size_t false_count   = 0;
    std::size_t disagreements = 0;
  };

  struct CrosscheckFailure {
    std::string    instance;  // rendered generators
    std::string    property;
    std::string    reason;
  };

  struct CrosscheckSummary {
    CrosscheckOptions options;
    std::size_t       instances        = 0;
    std::size_t       skipped          = 0;
    std::size_t       checks           = 0;
    std::size_t       disagreements    = 0;
    std::size_t       replays          = 0;  // witnesses verified
    std::size_t       replay_failures  = 0;
    std::size_t       replay_unverified = 0;  // witness present, not checkable
    std::size_t       elements_checked = 0;  // weak-inverse checks
    std::size_t       weak_inverse_failures = 0;
    std::size_t       nilpotent_instances   = 0;
    std::size_t       degree_bound_failures = 0;
    std::map<std::string, PropertyTally> tally;
    std::vector<CrosscheckFailure>       failures;  // first max_reported

    bool passed() const noexcept {
      return disagreements == 0 && replay_failures == 0
             && replay_unverified == 0
             && weak_inverse_failures == 0 && degree_bound_failures == 0;
    }
  };

  // One random generator set; maps are drawn as uniform maps, permutations,
  // idempotents or maps of rank at most 2 with equal probability.
  GeneratorSet random_generators(std::mt19937_64& rng,
                                 std::size_t      degree,
                                 std::size_t      count);

  // Calls f on every generator list of the given degree and size in
  // lexicographic order of the (1-based) image sequences.
  template <typename F>
  void for_each_generator_set(std::size_t degree, std::size_t count, F&& f);

  CrosscheckSummary crosscheck(CrosscheckOptions const& options);

  // Deterministic: no timing information.
  nlohmann::json to_json(CrosscheckSummary const& s);

  // Every transformation of the given degree, in lexicographic order.
  std::vector<Transformation> all_transformations(std::size_t degree);

  template <typename F>
  void for_each_generator_set(std::size_t degree, std::size_t count, F&& f) {
    auto const               all = all_transformations(degree);
    std::vector<std::size_t> pick(count, 0);
    while (true) {
      std::vector<Transformation> gens;
      for (auto i : pick) {
        gens.push_back(all[i]);
      }
      f(GeneratorSet(std::move(gens)));
      std::size_t i = count;
      while (i > 0) {
        --i;
        if (++pick[i] < all.size()) {
          break;
        }
        pick[i] = 0;
        if (i == 0) {
          return;
        }
      }
    }
  }

}  // namespace tsprops

#endif  // TSPROPS_CROSSCHECK_HPP_
