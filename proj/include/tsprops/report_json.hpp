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

// JSON form of reports, as described by schema/report.schema.json.  Points,
// generator indices and transformation images are 1-based.

#ifndef TSPROPS_REPORT_JSON_HPP_
#define TSPROPS_REPORT_JSON_HPP_

#include <json.hpp>  // for nlohmann::json

#include "report.hpp"  // for PropertyReport, Witness

namespace tsprops {

  nlohmann::json to_json(Witness const& w);
  nlohmann::json to_json(PropertyReport const& r);

  // Inverse of to_json; throws ParseError on malformed input.
  Witness        witness_from_json(nlohmann::json const& j);
  PropertyReport report_from_json(nlohmann::json const& j);

}  // namespace tsprops

#endif  // TSPROPS_REPORT_JSON_HPP_
