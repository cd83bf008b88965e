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

#include "tsprops/io.hpp"

#include <algorithm>  // for sort, unique
#include <cctype>    // for isalnum, isalpha
#include <charconv>  // for from_chars
#include <cstdint>   // for uint64_t
#include <cstdio>    // for snprintf
#include <fstream>   // for ifstream
#include <sstream>   // for ostringstream, istringstream
#include <utility>   // for move

namespace tsprops {

  namespace {

    struct Line {
      std::size_t number;
      std::string text;  // comment stripped, trimmed
    };

    std::string trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r");
      return std::string(s.substr(first, last - first + 1));
    }

    std::vector<Line> meaningful_lines(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       number = 0, pos = 0;
      while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        auto line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        if (auto t = trim(line); !t.empty()) {
          lines.push_back({number, std::move(t)});
        }
        pos = end + 1;
      }
      return lines;
    }

    std::vector<std::string> fields(std::string const& s) {
      std::istringstream       in(s);
      std::vector<std::string> out;
      for (std::string f; in >> f;) {
        out.push_back(f);
      }
      return out;
    }

    long long integer(std::string const& s, std::size_t line) {
      long long value = 0;
      auto [ptr, ec]  = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line, "expected an integer, found '" + s + "'");
      }
      return value;
    }

    Point point(std::string const& s, std::size_t n, std::size_t line) {
      auto const v = integer(s, line);
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw ParseError(line,
                         "point " + s + " out of range 1.."
                             + std::to_string(n));
      }
      return static_cast<Point>(v - 1);
    }

    std::size_t degree(std::vector<Line> const& lines, char const* what) {
      if (lines.empty()) {
        throw ParseError(0, std::string("empty ") + what + " file");
      }
      auto const v = integer(lines[0].text, lines[0].number);
      if (v < 1) {
        throw ParseError(lines[0].number, "the degree must be positive");
      }
      return static_cast<std::size_t>(v);
    }

    bool valid_name(std::string const& s) {
      if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
      }
      for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
          return false;
        }
      }
      return true;
    }

    struct NamedMap {
      std::string    name;  // empty when unnamed
      Transformation map;
    };

    NamedMap map_line(Line const& line, std::size_t n) {
      std::string rest = line.text;
      NamedMap    result;
      if (auto colon = rest.find(':'); colon != std::string::npos) {
        result.name = trim(rest.substr(0, colon));
        if (!valid_name(result.name)) {
          throw ParseError(line.number, "invalid name '" + result.name + "'");
        }
        rest = rest.substr(colon + 1);
      }
      auto const f = fields(rest);
      if (f.size() != n) {
        throw ParseError(line.number,
                         "expected " + std::to_string(n) + " images, found "
                             + std::to_string(f.size()));
      }
      std::vector<Point> images;
      for (auto const& s : f) {
        images.push_back(point(s, n, line.number));
      }
      result.map = Transformation(std::move(images));
      return result;
    }

    void collect(std::vector<NamedMap> const&   maps,
                 std::vector<Transformation>& out,
                 std::vector<std::string>&    names) {
      bool any = false;
      for (auto const& m : maps) {
        out.push_back(m.map);
        any = any || !m.name.empty();
      }
      if (any) {
        for (std::size_t i = 0; i < maps.size(); ++i) {
          names.push_back(maps[i].name.empty() ? "a" + std::to_string(i + 1)
                                               : maps[i].name);
        }
      }
    }

    void render_maps(std::ostringstream&                 out,
                     std::vector<Transformation> const& maps,
                     std::vector<std::string> const&    names) {
      for (std::size_t i = 0; i < maps.size(); ++i) {
        char const* sep = "";
        if (!names.empty()) {
          out << names[i] << ':';
          sep = " ";
        }
        for (auto x : maps[i].one_based()) {
          out << sep << x;
          sep = " ";
        }
        out << '\n';
      }
    }

  }  // namespace

  GeneratorSet parse_generators(std::string_view text) {
    auto const            lines = meaningful_lines(text);
    auto const            n     = degree(lines, "generator");
    std::vector<NamedMap> maps;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      maps.push_back(map_line(lines[i], n));
    }
    if (maps.empty()) {
      throw ParseError(lines.back().number, "no generators given");
    }
    std::vector<Transformation> gens;
    std::vector<std::string>    names;
    collect(maps, gens, names);
    return GeneratorSet(std::move(gens), std::move(names));
  }

  DFA parse_dfa(std::string_view text) {
    auto const lines = meaningful_lines(text);
    auto const n     = degree(lines, "DFA");
    DFA        d;
    d.states         = n;
    bool has_initial = false, has_final = false;
    std::vector<NamedMap> maps;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const f = fields(lines[i].text);
      if (f[0] == "initial") {
        if (has_initial || f.size() != 2) {
          throw ParseError(lines[i].number, "expected one 'initial q' line");
        }
        d.initial   = point(f[1], n, lines[i].number);
        has_initial = true;
      } else if (f[0] == "final") {
        if (has_final) {
          throw ParseError(lines[i].number, "duplicate 'final' line");
        }
        for (std::size_t j = 1; j < f.size(); ++j) {
          d.final.push_back(point(f[j], n, lines[i].number));
        }
        std::sort(d.final.begin(), d.final.end());
        d.final.erase(std::unique(d.final.begin(), d.final.end()),
                      d.final.end());
        has_final = true;
      } else {
        maps.push_back(map_line(lines[i], n));
      }
    }
    auto const last = lines.back().number;
    if (!has_initial) {
      throw ParseError(last, "missing 'initial' line");
    }
    if (!has_final) {
      throw ParseError(last, "missing 'final' line");
    }
    if (maps.empty()) {
      throw ParseError(last, "no letters given");
    }
    collect(maps, d.letters, d.names);
    return d;
  }

  InputDigraph parse_digraph(std::string_view text) {
    auto const   lines = meaningful_lines(text);
    InputDigraph g;
    g.vertices = degree(lines, "digraph");
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const f = fields(lines[i].text);
      if (f.size() != 2) {
        throw ParseError(lines[i].number, "expected an edge 'u v'");
      }
      g.edges.emplace_back(point(f[0], g.vertices, lines[i].number),
                           point(f[1], g.vertices, lines[i].number));
    }
    return g;
  }

  std::string render_generators(GeneratorSet const&             gens,
                                std::vector<std::string> const& comments) {
    std::ostringstream out;
    for (auto const& c : comments) {
      out << "# " << c << '\n';
    }
    out << gens.degree() << '\n';
    render_maps(out, gens.generators(), gens.names());
    return out.str();
  }

  std::string render_dfa(DFA const& d) {
    std::ostringstream out;
    out << d.states << "\ninitial " << d.initial + 1 << "\nfinal";
    for (auto q : d.final) {
      out << ' ' << q + 1;
    }
    out << '\n';
    render_maps(out, d.letters, d.names);
    return out.str();
  }

  std::string render_digraph(InputDigraph const& g) {
    std::ostringstream out;
    out << g.vertices << '\n';
    for (auto const& [v, w] : g.edges) {
      out << v + 1 << ' ' << w + 1 << '\n';
    }
    return out.str();
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  std::string digest(GeneratorSet const& gens) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : render_generators(gens)) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

}  // namespace tsprops
