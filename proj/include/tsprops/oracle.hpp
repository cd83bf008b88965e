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

// Brute-force ground truth.  Enumerates every element of S and decides each
// property straight from its definition.  Nothing here depends on the
// structural checkers; they are tested against it.

#ifndef TSPROPS_ORACLE_HPP_
#define TSPROPS_ORACLE_HPP_

#include <cstddef>        // for size_t
#include <optional>       // for optional
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "core.hpp"            // for GeneratorSet, Transformation, Word
#include "quasi_identity.hpp"  // for QuasiIdentity
#include "report.hpp"          // for PropertyReport

namespace tsprops {

  inline constexpr std::size_t kDefaultElementCap = 200'000;

  // The elements of S in breadth-first order from the generators, each with
  // its shortest-then-lexicographically-least word, and the right Cayley
  // graph.
  class ElementTable {
   public:
    // Throws BudgetExceeded if |S| > cap.
    static ElementTable enumerate(GeneratorSet const& gens,
                                  std::size_t         cap = kDefaultElementCap);

    GeneratorSet const& generators() const noexcept {
      return _gens;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    Transformation const& element(std::size_t i) const noexcept {
      return _elements[i];
    }
    Word const& word(std::size_t i) const noexcept {
      return _words[i];
    }
    // Index of element(i) * a_g.
    std::size_t right(std::size_t i, std::size_t g) const noexcept {
      return _right[i * _gens.size() + g];
    }
    // Index of the element equal to a_g.
    std::size_t generator_element(std::size_t g) const noexcept {
      return _generator_element[g];
    }
    std::optional<std::size_t> index_of(Transformation const& t) const;

    std::vector<std::size_t> const& idempotents() const noexcept {
      return _idempotents;
    }

   private:
    GeneratorSet                                    _gens;
    std::vector<Transformation>                     _elements;
    std::vector<Word>                               _words;
    std::vector<std::size_t>                        _right;
    std::vector<std::size_t>                        _generator_element;
    std::vector<std::size_t>                        _idempotents;
    std::unordered_map<Transformation, std::size_t> _index;
  };

  class UnknownProperty : public Error {
   public:
    using Error::Error;
  };

  // Properties understood by definitional_check.
  std::vector<std::string> const& oracle_properties();

  // Throws UnknownProperty.
  PropertyReport definitional_check(ElementTable const& table,
                                    std::string_view    property);

  // Smallest d with S^d == {0}, or nullopt if S is not nilpotent.
  std::optional<std::size_t> nilpotency_degree(ElementTable const& table);

  // Indices (into the table) of the left and right identities of S.
  std::vector<std::size_t> oracle_left_identities(ElementTable const& table);
  std::vector<std::size_t> oracle_right_identities(ElementTable const& table);

  // An assignment (element index per variable) violating the quasi-identity,
  // the first in odometer order over table order; nullopt if S models it.
  std::optional<std::vector<std::size_t>>
  oracle_counterexample(ElementTable const& table, QuasiIdentity const& qid);

  // The report form of oracle_counterexample.
  PropertyReport oracle_models(ElementTable const&  table,
                               QuasiIdentity const& qid,
                               std::string          property = "identity");

  // True iff s lies in a subgroup of S, decided as s^(omega + 1) == s.
  bool in_subgroup(Transformation const& s);

}  // namespace tsprops

#endif  // TSPROPS_ORACLE_HPP_
