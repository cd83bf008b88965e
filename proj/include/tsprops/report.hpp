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

// The uniform result record returned by every checker.

#ifndef TSPROPS_REPORT_HPP_
#define TSPROPS_REPORT_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "core.hpp"  // for Point, Transformation, Word

namespace tsprops {

  enum class Verdict { True, False, Undecided };
  enum class Engine { structural, oracle };

  std::string to_string(Verdict v);  // "TRUE", "FALSE", "UNDECIDED"
  std::string to_string(Engine e);   // "structural", "oracle"

  // A certificate or counterexample.  The meaning of each field depends on
  // kind; replay() in replay.hpp documents and checks every kind.
  struct Witness {
    std::string                 kind;
    std::vector<Point>          points;
    std::vector<std::size_t>    indices;
    std::vector<Word>           words;
    std::vector<Transformation> elements;
    std::size_t                 bound = 0;  // a degree bound, 0 if unused
    std::string                 note;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  struct PropertyReport {
    std::string            property;
    Verdict                verdict = Verdict::Undecided;
    Engine                 engine  = Engine::structural;
    std::optional<Witness> witness;
    std::string            message;

    bool holds() const noexcept {
      return verdict == Verdict::True;
    }
  };

  inline Verdict verdict_of(bool b) {
    return b ? Verdict::True : Verdict::False;
  }

}  // namespace tsprops

#endif  // TSPROPS_REPORT_HPP_
