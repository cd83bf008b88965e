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

#include "tsprops/fo_checks.hpp"

#include <optional>  // for optional
#include <utility>   // for move

namespace tsprops {

  namespace {

    PropertyReport report(char const* property, bool holds) {
      PropertyReport r;
      r.property = property;
      r.verdict  = verdict_of(holds);
      r.engine   = Engine::structural;
      return r;
    }

    PropertyReport violation(char const*              property,
                             std::string              kind,
                             std::vector<std::size_t> indices,
                             std::vector<Point>       points,
                             std::string              message) {
      auto r    = report(property, false);
      r.witness = Witness{std::move(kind), std::move(points),
                          std::move(indices), {}, {}};
      r.message = std::move(message);
      return r;
    }

    std::optional<Witness> noncommuting(GeneratorSet const& gens) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
          for (Point q = 0; q < gens.degree(); ++q) {
            if (gens[j][gens[i][q]] != gens[i][gens[j][q]]) {
              return Witness{"noncommuting_generators", {q}, {i, j}, {}, {}};
            }
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  PropertyReport is_commutative(GeneratorSet const& gens) {
    if (auto w = noncommuting(gens)) {
      auto r    = report("commutative", false);
      r.message = gens.name(w->indices[0]) + " and " + gens.name(w->indices[1])
                  + " do not commute at point "
                  + std::to_string(w->points[0] + 1);
      r.witness = std::move(w);
      return r;
    }
    return report("commutative", true);
  }

  PropertyReport is_semilattice(GeneratorSet const& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto const& a = gens[i];
      for (Point q = 0; q < gens.degree(); ++q) {
        if (a[a[q]] != a[q]) {
          return violation("semilattice",
                           "non_idempotent_generator",
                           {i},
                           {q},
                           gens.name(i) + " is not idempotent");
        }
      }
    }
    auto r     = is_commutative(gens);
    r.property = "semilattice";
    return r;
  }

  PropertyReport is_group(GeneratorSet const& gens) {
    auto const n = gens.degree();
    // (1) common image
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto const im = image(gens[i]);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        auto const other = image(gens[j]);
        for (auto q : im) {
          if (!contains(other, q)) {
            return violation("group",
                             "group_image_mismatch",
                             {i, j},
                             {q},
                             "point " + std::to_string(q + 1)
                                 + " is in the image of " + gens.name(i)
                                 + " but not of " + gens.name(j));
          }
        }
      }
    }
    // (2) each generator permutes its image
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto const& a = gens[i];
      for (Point p = 0; p < n; ++p) {
        for (Point q = p + 1; q < n; ++q) {
          if (a[p] != a[q] && a[a[p]] == a[a[q]]) {
            return violation("group",
                             "group_not_permutation_on_image",
                             {i},
                             {p, q},
                             gens.name(i) + " is not a permutation on its image");
          }
        }
      }
    }
    // (3) common kernel
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        for (Point p = 0; p < n; ++p) {
          for (Point q = p + 1; q < n; ++q) {
            if ((gens[i][p] == gens[i][q]) != (gens[j][p] == gens[j][q])) {
              return violation("group",
                               "group_kernel_mismatch",
                               {i, j},
                               {p, q},
                               gens.name(i) + " and " + gens.name(j)
                                   + " have different kernels");
            }
          }
        }
      }
    }
    return report("group", true);
  }

}  // namespace tsprops
