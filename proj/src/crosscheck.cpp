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

#include "tsprops/crosscheck.hpp"

#include <algorithm>  // for sort, swap
#include <optional>   // for optional
#include <utility>    // for move

#include "tsprops/io.hpp"            // for render_generators
#include "tsprops/nl_checks.hpp"     // for nilpotency_degree_upper_bound
#include "tsprops/oracle.hpp"        // for ElementTable
#include "tsprops/properties.hpp"    // for structural_check
#include "tsprops/pspace_search.hpp"  // for canonical_weak_inverse
#include "tsprops/replay.hpp"        // for replay
#include "tsprops/report_json.hpp"   // for to_json

namespace tsprops {

  std::vector<Transformation> all_transformations(std::size_t degree) {
    std::vector<Transformation> result;
    std::vector<Point>          images(degree, 0);
    while (true) {
      result.emplace_back(images);
      std::size_t i = degree;
      while (i > 0) {
        --i;
        if (++images[i] < degree) {
          break;
        }
        images[i] = 0;
        if (i == 0) {
          return result;
        }
      }
    }
  }

  GeneratorSet random_generators(std::mt19937_64& rng,
                                 std::size_t      degree,
                                 std::size_t      count) {
    // Plain modulo keeps the draws identical across standard libraries.
    auto const below = [&rng](std::size_t m) {
      return static_cast<std::size_t>(rng() % m);
    };
    std::vector<Transformation> gens;
    for (std::size_t g = 0; g < count; ++g) {
      std::vector<Point> images(degree);
      switch (below(4)) {
        case 0:
          for (auto& x : images) {
            x = static_cast<Point>(below(degree));
          }
          break;
        case 1:
          for (std::size_t i = 0; i < degree; ++i) {
            images[i] = static_cast<Point>(i);
          }
          for (std::size_t i = degree; i > 1; --i) {
            std::swap(images[i - 1], images[below(i)]);
          }
          break;
        case 2: {
          PointSet fixed;
          for (Point q = 0; q < degree; ++q) {
            if (below(2) == 0) {
              fixed.push_back(q);
            }
          }
          if (fixed.empty()) {
            fixed.push_back(static_cast<Point>(below(degree)));
          }
          for (Point q = 0; q < degree; ++q) {
            images[q] = contains(fixed, q) ? q : fixed[below(fixed.size())];
          }
          break;
        }
        default: {
          Point const a = static_cast<Point>(below(degree));
          Point const b = static_cast<Point>(below(degree));
          for (auto& x : images) {
            x = below(2) == 0 ? a : b;
          }
          break;
        }
      }
      gens.emplace_back(std::move(images));
    }
    return GeneratorSet(std::move(gens));
  }

  namespace {

    class Runner {
     public:
      explicit Runner(CrosscheckOptions const& options) {
        _s.options = options;
        if (_s.options.properties.empty()) {
          for (auto const& p : property_names()) {
            if (!is_oracle_only(p)) {
              _s.options.properties.push_back(p);
            }
          }
        }
      }

      // False if the instance was too large for the oracle.
      bool instance(GeneratorSet const& gens) {
        std::optional<ElementTable> table;
        try {
          table = ElementTable::enumerate(gens, _s.options.oracle_cap);
        } catch (BudgetExceeded const&) {
          ++_s.skipped;
          return false;
        }
        ++_s.instances;
        for (auto const& p : _s.options.properties) {
          property(gens, *table, p);
        }
        for (std::size_t i = 0; i < table->size(); ++i) {
          auto const& s = table->element(i);
          auto const  t = canonical_weak_inverse(s).element;
          ++_s.elements_checked;
          if (t * s * t != t) {
            ++_s.weak_inverse_failures;
            fail(gens, "weak-inverse", "s^(2 omega - 1) is not a weak inverse of "
                                           + to_string(s));
          }
        }
        if (auto d = nilpotency_degree(*table)) {
          ++_s.nilpotent_instances;
          auto const bound = nilpotency_degree_upper_bound(gens);
          if (*d > bound || bound > gens.degree()) {
            ++_s.degree_bound_failures;
            fail(gens, "nilpotent", "degree " + std::to_string(*d) + ", bound "
                                        + std::to_string(bound));
          }
        }
        return true;
      }

      CrosscheckSummary& summary() {
        return _s;
      }

     private:
      void property(GeneratorSet const& gens,
                    ElementTable const& table,
                    std::string const&  p) {
        CheckLimits limits;
        limits.element_cap = _s.options.oracle_cap;
        auto const structural = structural_check(gens, p, limits);
        auto const oracle     = definitional_check(table, p);
        auto&      tally      = _s.tally[p];
        ++_s.checks;
        (oracle.holds() ? tally.true_count : tally.false_count)++;
        std::string why;
        if (!reports_agree(structural, oracle, &why)) {
          ++_s.disagreements;
          ++tally.disagreements;
          fail(gens, p, why);
        }
        for (auto const* r : {&structural, &oracle}) {
          auto const result = replay(gens, *r, &table);
          if (result.status == ReplayStatus::verified) {
            ++_s.replays;
          } else if (result.failed()) {
            ++_s.replay_failures;
            fail(gens, p, to_string(r->engine) + " witness: " + result.detail);
          } else if (r->witness) {
            ++_s.replay_unverified;
            fail(gens, p, to_string(r->engine) + " witness not checkable");
          }
        }
      }

      void fail(GeneratorSet const& gens,
                std::string const&  property,
                std::string         reason) {
        if (_s.failures.size() < _s.options.max_reported) {
          _s.failures.push_back(
              {render_generators(gens), property, std::move(reason)});
        }
      }

      CrosscheckSummary _s;
    };

  }  // namespace

  CrosscheckSummary crosscheck(CrosscheckOptions const& options) {
    if (options.max_degree == 0 || options.max_generators == 0) {
      throw PreconditionError("degree and generator count must be positive");
    }
    Runner runner(options);
    if (options.exhaustive) {
      for (std::size_t k = 1; k <= options.max_generators; ++k) {
        for_each_generator_set(options.max_degree, k, [&runner](auto const& g) {
          runner.instance(g);
        });
      }
      return std::move(runner.summary());
    }
    std::mt19937_64 rng(options.seed);
    std::size_t     done = 0, attempts = 0;
    while (done < options.samples) {
      if (++attempts > 100 * options.samples + 100) {
        throw Error("too many instances exceed the oracle cap");
      }
      auto const n    = 1 + static_cast<std::size_t>(rng() % options.max_degree);
      auto const k    = 1 + static_cast<std::size_t>(rng() % options.max_generators);
      if (runner.instance(random_generators(rng, n, k))) {
        ++done;
      }
    }
    return std::move(runner.summary());
  }

  nlohmann::json to_json(CrosscheckSummary const& s) {
    using nlohmann::json;
    auto const& o   = s.options;
    json        out = {
        {"mode", o.exhaustive ? "exhaustive" : "random"},
        {"degree", o.max_degree},
        {"generators", o.max_generators},
        {"oracle_cap", o.oracle_cap},
        {"instances", s.instances},
        {"skipped", s.skipped},
        {"checks", s.checks},
        {"disagreements", s.disagreements},
        {"replayed_witnesses", s.replays},
        {"replay_failures", s.replay_failures},
        {"replay_unverified", s.replay_unverified},
        {"weak_inverse_checks", s.elements_checked},
        {"weak_inverse_failures", s.weak_inverse_failures},
        {"nilpotent_instances", s.nilpotent_instances},
        {"degree_bound_failures", s.degree_bound_failures},
        {"passed", s.passed()}};
    if (!o.exhaustive) {
      out["samples"] = o.samples;
      out["seed"]    = o.seed;
    }
    json tally = json::object();
    for (auto const& [p, t] : s.tally) {
      tally[p] = {{"true", t.true_count},
                  {"false", t.false_count},
                  {"disagreements", t.disagreements}};
    }
    out["properties"] = std::move(tally);
    json failures     = json::array();
    for (auto const& f : s.failures) {
      failures.push_back(
          {{"instance", f.instance}, {"property", f.property}, {"reason", f.reason}});
    }
    out["failures"] = std::move(failures);
    return out;
  }

}  // namespace tsprops
