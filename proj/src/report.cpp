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

#include "tsprops/report.hpp"

namespace tsprops {

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::True:
        return "TRUE";
      case Verdict::False:
        return "FALSE";
      case Verdict::Undecided:
        break;
    }
    return "UNDECIDED";
  }

  std::string to_string(Engine e) {
    return e == Engine::structural ? "structural" : "oracle";
  }

}  // namespace tsprops
