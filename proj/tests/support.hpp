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

// Shared helpers for the unit tests: 1-based literals and oracle shortcuts.

#ifndef TSPROPS_TESTS_SUPPORT_HPP_
#define TSPROPS_TESTS_SUPPORT_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "tsprops/core.hpp"
#include "tsprops/oracle.hpp"
#include "tsprops/report.hpp"

namespace tsprops::test {

  inline Transformation T(std::vector<long long> const& images) {
    return Transformation::from_one_based(images);
  }

  inline GeneratorSet G(std::initializer_list<std::vector<long long>> maps) {
    std::vector<Transformation> gens;
    for (auto const& m : maps) {
      gens.push_back(T(m));
    }
    return GeneratorSet(std::move(gens));
  }

  inline PointSet P(std::initializer_list<Point> one_based) {
    PointSet out;
    for (auto q : one_based) {
      out.push_back(q - 1);
    }
    return out;
  }

  inline PropertyReport oracle(GeneratorSet const& gens,
                               std::string const&  property) {
    return definitional_check(ElementTable::enumerate(gens), property);
  }

  inline bool oracle_holds(GeneratorSet const& gens,
                           std::string const&  property) {
    return oracle(gens, property).holds();
  }

  // 1-based word literal.
  inline Word W(std::initializer_list<std::size_t> letters) {
    Word w;
    for (auto g : letters) {
      w.push_back(g - 1);
    }
    return w;
  }

}  // namespace tsprops::test

#endif  // TSPROPS_TESTS_SUPPORT_HPP_
