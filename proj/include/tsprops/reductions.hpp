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

// Constructions turning automata and digraph problems into semigroup
// property questions.  Each output is small and explicit; the tests check
// the stated equivalences against direct automaton or graph reasoning.

#ifndef TSPROPS_REDUCTIONS_HPP_
#define TSPROPS_REDUCTIONS_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "core.hpp"  // for GeneratorSet, Point, PointSet, Transformation

namespace tsprops {

  struct DFA {
    std::size_t                 states = 0;
    Point                       initial = 0;
    PointSet                    final;
    std::vector<Transformation> letters;
    std::vector<std::string>    names;  // empty, or one per letter

    // Throws PreconditionError.
    void validate() const;

    friend bool operator==(DFA const&, DFA const&) = default;
  };

  struct InputDigraph {
    std::size_t                          vertices = 0;
    std::vector<std::pair<Point, Point>> edges;

    void validate() const;

    friend bool operator==(InputDigraph const&, InputDigraph const&) = default;
  };

  // No state of F is reachable from the initial state (the empty word
  // included).
  bool language_is_empty(DFA const& d);

  // Degree n + 1 with the new point last: the letters (fixing the new
  // point), b sending every state to the initial one, and c sending the
  // final states and the new point to the new point.  S has a zero iff the
  // language is nonempty, and then the zero is its only left or right zero.
  GeneratorSet dfa_emptiness_to_zero(DFA const& d);

  // Points are (state, counter) pairs, pair (q, c) numbered q * n + c, plus
  // a sink numbered n^2.  Generator a_{i,j} (letter i, counter j) advances a
  // non-final state with counter j by letter i and bumps the counter; b
  // restarts final states; everything else falls into the sink.  With k
  // letters there are k * n + 1 generators.  An empty language makes every
  // square zero; a nonempty one gives an idempotent that is not a left zero.
  // Throws PreconditionError if the initial state is final.
  GeneratorSet dfa_emptiness_to_nilpotent(DFA const& d);

  // One generator per edge (v, w) on the vertices plus a sink (last): v goes
  // to w, every other point to the sink.  Throws PreconditionError if there
  // are no edges.
  GeneratorSet digraph_to_semigroup(InputDigraph const& g);

  // The union of the DFA state sets (in order) plus a sink, last.  Every DFA
  // must have exactly one final state and the same number of letters.
  struct RegularInstance {
    GeneratorSet gens;    // extended letters, then b
    std::size_t  target;  // index of b
  };
  // b sends each final state to its DFA's initial state and everything
  // else to the sink; b is regular in S iff some word is accepted by all.
  RegularInstance dfa_intersection_to_regular(std::vector<DFA> const& ds);

  struct WeakInverseInstance {
    GeneratorSet   gens;  // extended letters, then c
    Transformation target;
  };
  // c resets every state of a DFA to that DFA's initial state; the target
  // b (as above) has a weak inverse in S iff some word is accepted by all.
  WeakInverseInstance
  dfa_intersection_to_weak_inverse(std::vector<DFA> const& ds);

}  // namespace tsprops

#endif  // TSPROPS_REDUCTIONS_HPP_
