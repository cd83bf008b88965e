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

// Quasi-identities  x_i = x_i^2 (i in E)  =>  u = v  over variables
// x_1 .. x_m, their presets and their textual syntax
//
//   idem(x1,x2) => x1 x2 = x2 x1
//
// Variables are x1 .. x9; concatenation is juxtaposition.

#ifndef TSPROPS_QUASI_IDENTITY_HPP_
#define TSPROPS_QUASI_IDENTITY_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace tsprops {

  struct QuasiIdentity {
    std::size_t              variables = 0;
    std::vector<bool>        idempotent;  // one flag per variable
    std::vector<std::size_t> lhs;         // 0-based variable indices
    std::vector<std::size_t> rhs;

    // Throws PreconditionError on empty sides or out-of-range letters.
    void validate() const;

    friend bool operator==(QuasiIdentity const&, QuasiIdentity const&)
        = default;
  };

  // Variables and E given 1-based, as they are written.
  QuasiIdentity make_quasi_identity(std::size_t              variables,
                                    std::vector<std::size_t> idempotent_vars,
                                    std::vector<std::size_t> lhs,
                                    std::vector<std::size_t> rhs);

  // band, central_idempotents, commuting_idempotents, orthodox,
  // square_absorbs (x^2 y = x^2), idempotent_left_identity (E={1}: x1 x2 =
  // x2) and idempotent_right_identity (E={1}: x2 x1 = x2).  Throws
  // PreconditionError on an unknown name.
  QuasiIdentity                   preset(std::string_view name);
  std::vector<std::string> const& preset_names();

  // Throws ParseError.
  QuasiIdentity parse_quasi_identity(std::string_view text);
  std::string   to_string(QuasiIdentity const& qid);

}  // namespace tsprops

#endif  // TSPROPS_QUASI_IDENTITY_HPP_
