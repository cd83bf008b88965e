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

#include "tsprops/report_json.hpp"

#include <string>   // for string
#include <utility>  // for move
#include <vector>   // for vector

namespace tsprops {

  using nlohmann::json;

  namespace {

    json one_based(Word const& w) {
      json out = json::array();
      for (auto g : w) {
        out.push_back(g + 1);
      }
      return out;
    }

    [[noreturn]] void malformed(std::string const& what) {
      throw ParseError(0, "malformed report JSON: " + what);
    }

    std::size_t index(json const& j) {
      if (!j.is_number_integer() || j.get<long long>() < 1) {
        malformed("expected a positive integer");
      }
      return j.get<std::size_t>() - 1;
    }

    json const& array(json const& j, char const* key) {
      static json const empty = json::array();
      if (!j.contains(key)) {
        return empty;
      }
      if (!j.at(key).is_array()) {
        malformed(std::string(key) + " must be an array");
      }
      return j.at(key);
    }

  }  // namespace

  json to_json(Witness const& w) {
    json out = {{"kind", w.kind}};
    if (!w.points.empty()) {
      json points = json::array();
      for (auto q : w.points) {
        points.push_back(q + 1);
      }
      out["points"] = std::move(points);
    }
    if (!w.indices.empty()) {
      out["generators"] = one_based(w.indices);
    }
    if (!w.words.empty()) {
      json words = json::array();
      for (auto const& word : w.words) {
        words.push_back(one_based(word));
      }
      out["words"] = std::move(words);
    }
    if (!w.elements.empty()) {
      json elements = json::array();
      for (auto const& e : w.elements) {
        elements.push_back(e.one_based());
      }
      out["elements"] = std::move(elements);
    }
    if (w.bound != 0) {
      out["bound"] = w.bound;
    }
    if (!w.note.empty()) {
      out["note"] = w.note;
    }
    return out;
  }

  json to_json(PropertyReport const& r) {
    json out = {{"property", r.property},
                {"verdict", to_string(r.verdict)},
                {"engine", to_string(r.engine)}};
    if (!r.message.empty()) {
      out["message"] = r.message;
    }
    if (r.witness) {
      out["witness"] = to_json(*r.witness);
    }
    return out;
  }

  Witness witness_from_json(json const& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
      malformed("a witness needs a kind");
    }
    Witness w;
    w.kind = j.at("kind").get<std::string>();
    for (auto const& q : array(j, "points")) {
      w.points.push_back(static_cast<Point>(index(q)));
    }
    for (auto const& g : array(j, "generators")) {
      w.indices.push_back(index(g));
    }
    for (auto const& word : array(j, "words")) {
      if (!word.is_array()) {
        malformed("a word must be an array");
      }
      Word v;
      for (auto const& g : word) {
        v.push_back(index(g));
      }
      w.words.push_back(std::move(v));
    }
    for (auto const& e : array(j, "elements")) {
      if (!e.is_array() || e.empty()) {
        malformed("an element must be a nonempty array");
      }
      std::vector<Point> images;
      for (auto const& x : e) {
        auto const i = index(x);
        if (i >= e.size()) {
          malformed("image out of range");
        }
        images.push_back(static_cast<Point>(i));
      }
      w.elements.emplace_back(std::move(images));
    }
    if (j.contains("bound")) {
      w.bound = index(j.at("bound")) + 1;
    }
    if (j.contains("note")) {
      w.note = j.at("note").get<std::string>();
    }
    return w;
  }

  PropertyReport report_from_json(json const& j) {
    if (!j.is_object()) {
      malformed("a report must be an object");
    }
    PropertyReport r;
    try {
      r.property       = j.at("property").get<std::string>();
      auto const v     = j.at("verdict").get<std::string>();
      auto const e     = j.at("engine").get<std::string>();
      if (v == "TRUE") {
        r.verdict = Verdict::True;
      } else if (v == "FALSE") {
        r.verdict = Verdict::False;
      } else if (v == "UNDECIDED") {
        r.verdict = Verdict::Undecided;
      } else {
        malformed("unknown verdict " + v);
      }
      if (e == "structural") {
        r.engine = Engine::structural;
      } else if (e == "oracle") {
        r.engine = Engine::oracle;
      } else {
        malformed("unknown engine " + e);
      }
      if (j.contains("message")) {
        r.message = j.at("message").get<std::string>();
      }
    } catch (json::exception const& ex) {
      malformed(ex.what());
    }
    if (j.contains("witness")) {
      r.witness = witness_from_json(j.at("witness"));
    }
    return r;
  }

}  // namespace tsprops
