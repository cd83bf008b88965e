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

// Plain-text formats, all with 1-based points and '#' comments.
//
// Generators:          DFA:                Digraph:
//   3                    2                   3
//   c1: 1 1 1            initial 1           1 2
//   c2: 2 2 2            final 2             2 3
//                        a: 2 2
//
// The first meaningful line is the degree.  Generator (and letter) lines
// hold n images with an optional "name:" prefix; unnamed lines in a file
// that names some generators get the default names.

#ifndef TSPROPS_IO_HPP_
#define TSPROPS_IO_HPP_

#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "core.hpp"        // for GeneratorSet
#include "reductions.hpp"  // for DFA, InputDigraph

namespace tsprops {

  // All parsers throw ParseError carrying the offending line number.
  GeneratorSet parse_generators(std::string_view text);
  DFA          parse_dfa(std::string_view text);
  InputDigraph parse_digraph(std::string_view text);

  // Each comment line is written as "# <line>" before the data.
  std::string render_generators(GeneratorSet const&             gens,
                                std::vector<std::string> const& comments = {});
  std::string render_dfa(DFA const& d);
  std::string render_digraph(InputDigraph const& g);

  // Reads a whole file; throws Error if it cannot be opened.
  std::string read_file(std::string const& path);

  // FNV-1a of the rendered generators, as 16 hex digits.
  std::string digest(GeneratorSet const& gens);

}  // namespace tsprops

#endif  // TSPROPS_IO_HPP_
