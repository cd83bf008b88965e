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

#include "tsprops/oracle.hpp"

#include <algorithm>  // for find, min
#include <utility>    // for move

namespace tsprops {

  ////////////////////////////////////////////////////////////////////////
  // ElementTable
  ////////////////////////////////////////////////////////////////////////

  ElementTable ElementTable::enumerate(GeneratorSet const& gens,
                                       std::size_t         cap) {
    if (cap == 0) {
      throw PreconditionError("element cap must be >= 1");
    }
    ElementTable table;
    table._gens = gens;
    auto add    = [&table, cap](Transformation t, Word w) {
      auto [it, inserted] = table._index.emplace(t, table._elements.size());
      if (inserted) {
        if (table._elements.size() == cap) {
          throw BudgetExceeded("semigroup has more than "
                               + std::to_string(cap) + " elements");
        }
        table._elements.push_back(std::move(t));
        table._words.push_back(std::move(w));
      }
      return it->second;
    };
    for (std::size_t g = 0; g < gens.size(); ++g) {
      table._generator_element.push_back(add(gens[g], Word{g}));
    }
    for (std::size_t i = 0; i < table._elements.size(); ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Word w = table._words[i];
        w.push_back(g);
        auto j = add(table._elements[i] * gens[g], std::move(w));
        table._right.push_back(j);
      }
    }
    for (std::size_t i = 0; i < table._elements.size(); ++i) {
      if (is_idempotent(table._elements[i])) {
        table._idempotents.push_back(i);
      }
    }
    return table;
  }

  std::optional<std::size_t>
  ElementTable::index_of(Transformation const& t) const {
    auto it = _index.find(t);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Helpers
  ////////////////////////////////////////////////////////////////////////

  bool in_subgroup(Transformation const& s) {
    return idempotent_power(s) * s == s;
  }

  namespace {

    Witness element_witness(ElementTable const&             table,
                            std::string                     kind,
                            std::vector<std::size_t> const& which) {
      Witness w;
      w.kind = std::move(kind);
      for (auto i : which) {
        w.words.push_back(table.word(i));
        w.elements.push_back(table.element(i));
      }
      return w;
    }

    PropertyReport make(std::string_view property, bool holds) {
      PropertyReport r;
      r.property = std::string(property);
      r.verdict  = verdict_of(holds);
      r.engine   = Engine::oracle;
      return r;
    }

    PropertyReport fail(std::string_view         property,
                        Witness                  witness,
                        std::string              message) {
      auto r    = make(property, false);
      r.witness = std::move(witness);
      r.message = std::move(message);
      return r;
    }

    bool commute(Transformation const& s, Transformation const& t) {
      return s * t == t * s;
    }

    PropertyReport commutative(ElementTable const& table) {
      for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
          if (!commute(table.element(i), table.element(j))) {
            return fail("commutative",
                        element_witness(table, "noncommuting_elements", {i, j}),
                        "two elements do not commute");
          }
        }
      }
      return make("commutative", true);
    }

    PropertyReport band(ElementTable const& table, std::string_view name) {
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (!is_idempotent(table.element(i))) {
          return fail(name,
                      element_witness(table, "non_idempotent_element", {i}),
                      "an element is not idempotent");
        }
      }
      return make(name, true);
    }

    PropertyReport group(ElementTable const& table) {
      auto const& idem = table.idempotents();
      if (idem.size() != 1) {
        return fail("group",
                    element_witness(table,
                                    "distinct_idempotents",
                                    {idem.at(0), idem.at(1)}),
                    "S has more than one idempotent");
      }
      auto const  e  = idem[0];
      auto const& ev = table.element(e);
      for (std::size_t s = 0; s < table.size(); ++s) {
        auto const& sv = table.element(s);
        if (ev * sv != sv || sv * ev != sv) {
          return fail("group",
                      element_witness(table, "identity_fails", {e, s}),
                      "the unique idempotent is not an identity");
        }
      }
      for (std::size_t s = 0; s < table.size(); ++s) {
        auto const&    sv    = table.element(s);
        Transformation x     = sv;
        bool           found = false;
        for (std::size_t j = 0; j <= table.size() && !found; ++j) {
          found = (sv * x == ev);
          x     = x * sv;
        }
        if (!found) {
          return fail("group",
                      element_witness(table, "no_inverse_power", {s}),
                      "an element has no inverse power");
        }
      }
      auto r    = make("group", true);
      r.witness = element_witness(table, "identity_element", {e});
      return r;
    }

    std::optional<std::size_t> find_left_zero(ElementTable const& table) {
      for (std::size_t l = 0; l < table.size(); ++l) {
        auto const& lv = table.element(l);
        bool        ok = true;
        for (std::size_t s = 0; s < table.size() && ok; ++s) {
          ok = (lv * table.element(s) == lv);
        }
        if (ok) {
          return l;
        }
      }
      return std::nullopt;
    }

    std::optional<std::size_t> find_right_zero(ElementTable const& table) {
      for (std::size_t r = 0; r < table.size(); ++r) {
        auto const& rv = table.element(r);
        bool        ok = true;
        for (std::size_t s = 0; s < table.size() && ok; ++s) {
          ok = (table.element(s) * rv == rv);
        }
        if (ok) {
          return r;
        }
      }
      return std::nullopt;
    }

    std::optional<std::size_t> find_zero(ElementTable const& table) {
      for (std::size_t z = 0; z < table.size(); ++z) {
        auto const& zv = table.element(z);
        bool        ok = true;
        for (std::size_t s = 0; s < table.size() && ok; ++s) {
          auto const& sv = table.element(s);
          ok             = (zv * sv == zv && sv * zv == zv);
        }
        if (ok) {
          return z;
        }
      }
      return std::nullopt;
    }

    PropertyReport zero_report(ElementTable const&        table,
                               std::string_view           property,
                               std::optional<std::size_t> found,
                               std::string                kind) {
      auto r = make(property, found.has_value());
      if (found) {
        r.witness = element_witness(table, kind, {*found});
      } else {
        r.message = "no element satisfies the defining equations";
      }
      return r;
    }

    PropertyReport nilpotent(ElementTable const& table) {
      auto z = find_zero(table);
      if (!z) {
        auto r    = make("nilpotent", false);
        r.message = "S has no zero element";
        return r;
      }
      if (auto d = nilpotency_degree(table)) {
        auto r    = make("nilpotent", true);
        r.witness = element_witness(table, "nilpotent", {*z});
        r.witness->bound = *d;
        return r;
      }
      for (auto e : table.idempotents()) {
        if (e != *z) {
          return fail("nilpotent",
                      element_witness(table, "nonzero_idempotent", {e, *z}),
                      "S has an idempotent other than its zero");
        }
      }
      throw Error("internal error: non-nilpotent semigroup with a zero and "
                  "no other idempotent");
    }

    // Shortest word u with element(from) * u == element(to), through the
    // right Cayley graph.  Requires from != to.
    std::optional<Word> cayley_path(ElementTable const& table,
                                    std::size_t         from,
                                    std::size_t         to) {
      auto const               k = table.generators().size();
      std::vector<std::size_t> parent(table.size(), table.size());
      std::vector<std::size_t> label(table.size(), 0);
      std::vector<std::size_t> queue;
      std::vector<bool>        seen(table.size(), false);
      // Roots are the one-letter successors of from.
      for (std::size_t g = 0; g < k; ++g) {
        auto j = table.right(from, g);
        if (!seen[j]) {
          seen[j]  = true;
          label[j] = g;
          queue.push_back(j);
        }
      }
      for (std::size_t head = 0; head < queue.size(); ++head) {
        auto i = queue[head];
        if (i == to) {
          Word w;
          while (true) {
            w.push_back(label[i]);
            if (parent[i] == table.size()) {
              break;
            }
            i = parent[i];
          }
          std::reverse(w.begin(), w.end());
          return w;
        }
        for (std::size_t g = 0; g < k; ++g) {
          auto j = table.right(i, g);
          if (!seen[j]) {
            seen[j]   = true;
            parent[j] = i;
            label[j]  = g;
            queue.push_back(j);
          }
        }
      }
      return std::nullopt;
    }

    // Strongly connected components of the right Cayley graph (iterative
    // Tarjan); returns the component id of every element.
    std::vector<std::size_t> cayley_components(ElementTable const& table) {
      auto const               n = table.size();
      auto const               k = table.generators().size();
      std::size_t const        unset = n;
      std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
      std::vector<std::size_t> stack;
      std::vector<bool>        on_stack(n, false);
      std::vector<std::pair<std::size_t, std::size_t>> call;
      std::size_t counter = 0, components = 0;

      for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unset) {
          continue;
        }
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
          auto& [v, g] = call.back();
          if (g < k) {
            auto w = table.right(v, g++);
            if (index[w] == unset) {
              index[w] = low[w] = counter++;
              stack.push_back(w);
              on_stack[w] = true;
              call.emplace_back(w, 0);
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], index[w]);
            }
            continue;
          }
          auto const done = v;
          call.pop_back();
          if (!call.empty()) {
            auto parent = call.back().first;
            low[parent] = std::min(low[parent], low[done]);
          }
          if (low[done] == index[done]) {
            std::size_t x;
            do {
              x = stack.back();
              stack.pop_back();
              on_stack[x] = false;
              comp[x]     = components;
            } while (x != done);
            ++components;
          }
        }
      }
      return comp;
    }

    PropertyReport r_trivial(ElementTable const& table) {
      auto                     comp = cayley_components(table);
      std::vector<std::size_t> first(table.size(), table.size());
      for (std::size_t t = 0; t < table.size(); ++t) {
        auto const s = first[comp[t]];
        if (s == table.size()) {
          first[comp[t]] = t;
        } else {
          {
            auto u = cayley_path(table, s, t);
            auto v = cayley_path(table, t, s);
            if (!u || !v) {
              throw Error("internal error: inconsistent Cayley components");
            }
            auto w = element_witness(table, "r_related_pair", {s, t});
            w.words.push_back(*u);
            w.words.push_back(*v);
            return fail("r-trivial", std::move(w),
                        "two distinct elements generate the same right ideal");
          }
        }
      }
      return make("r-trivial", true);
    }

    PropertyReport idempotents_commute(ElementTable const& table,
                                       std::string_view    property) {
      auto const& idem = table.idempotents();
      for (std::size_t a = 0; a < idem.size(); ++a) {
        for (std::size_t b = a + 1; b < idem.size(); ++b) {
          if (!commute(table.element(idem[a]), table.element(idem[b]))) {
            return fail(property,
                        element_witness(table,
                                        "noncommuting_idempotents",
                                        {idem[a], idem[b]}),
                        "two idempotents do not commute");
          }
        }
      }
      return make(property, true);
    }

    PropertyReport idempotents_central(ElementTable const& table) {
      for (auto e : table.idempotents()) {
        for (std::size_t s = 0; s < table.size(); ++s) {
          if (!commute(table.element(e), table.element(s))) {
            return fail(
                "idempotents-central",
                element_witness(table, "noncentral_idempotent", {e, s}),
                "an idempotent does not commute with some element");
          }
        }
      }
      return make("idempotents-central", true);
    }

    PropertyReport orthodox(ElementTable const& table) {
      for (auto e : table.idempotents()) {
        for (auto f : table.idempotents()) {
          if (!is_idempotent(table.element(e) * table.element(f))) {
            return fail(
                "orthodox",
                element_witness(table, "non_idempotent_product", {e, f}),
                "a product of two idempotents is not idempotent");
          }
        }
      }
      return make("orthodox", true);
    }

    PropertyReport completely_regular(ElementTable const& table,
                                      std::string_view    property) {
      for (std::size_t s = 0; s < table.size(); ++s) {
        if (!in_subgroup(table.element(s))) {
          return fail(property,
                      element_witness(table, "not_in_subgroup", {s}),
                      "an element lies in no subgroup");
        }
      }
      return make(property, true);
    }

    PropertyReport clifford(ElementTable const& table) {
      auto r = completely_regular(table, "clifford");
      if (!r.holds()) {
        return r;
      }
      return idempotents_commute(table, "clifford");
    }

    bool is_regularized_by(Transformation const& s, Transformation const& t) {
      return s * t * s == s;
    }

    PropertyReport regular(ElementTable const& table) {
      for (std::size_t s = 0; s < table.size(); ++s) {
        bool found = false;
        for (std::size_t t = 0; t < table.size() && !found; ++t) {
          found = is_regularized_by(table.element(s), table.element(t));
        }
        if (!found) {
          return fail("regular",
                      element_witness(table, "non_regular_element", {s}),
                      "an element has no t with sts = s");
        }
      }
      return make("regular", true);
    }

    PropertyReport inverse(ElementTable const& table) {
      for (std::size_t s = 0; s < table.size(); ++s) {
        auto const&              sv = table.element(s);
        std::vector<std::size_t> inverses;
        for (std::size_t t = 0; t < table.size() && inverses.size() < 2; ++t) {
          auto const& tv = table.element(t);
          if (sv * tv * sv == sv && tv * sv * tv == tv) {
            inverses.push_back(t);
          }
        }
        if (inverses.empty()) {
          return fail("inverse",
                      element_witness(table, "non_regular_element", {s}),
                      "an element has no inverse");
        }
        if (inverses.size() > 1) {
          return fail(
              "inverse",
              element_witness(
                  table, "two_inverses", {s, inverses[0], inverses[1]}),
              "an element has two distinct inverses");
        }
      }
      return make("inverse", true);
    }

    PropertyReport identities_report(ElementTable const&             table,
                                     std::string_view                property,
                                     std::vector<std::size_t> const& found) {
      auto r = make(property, !found.empty());
      // Listed in canonical (map) order.
      auto sorted = found;
      std::sort(sorted.begin(), sorted.end(), [&table](auto a, auto b) {
        return table.element(a) < table.element(b);
      });
      r.witness = element_witness(table, std::string(property), sorted);
      for (auto& c : r.witness->kind) {
        if (c == '-') {
          c = '_';
        }
      }
      return r;
    }

    PropertyReport aperiodic(ElementTable const& table) {
      for (std::size_t s = 0; s < table.size(); ++s) {
        auto const& sv = table.element(s);
        auto        e  = idempotent_power(sv);
        if (e * sv != e) {
          return fail("aperiodic",
                      element_witness(table, "nontrivial_group_power", {s}),
                      "s^(omega+1) != s^omega for some s");
        }
      }
      return make("aperiodic", true);
    }

  }  // namespace

  std::vector<std::string> const& oracle_properties() {
    static std::vector<std::string> const names = {"commutative",
                                                   "semilattice",
                                                   "group",
                                                   "left-zero",
                                                   "right-zero",
                                                   "zero",
                                                   "nilpotent",
                                                   "r-trivial",
                                                   "band",
                                                   "idempotents-commute",
                                                   "idempotents-central",
                                                   "orthodox",
                                                   "completely-regular",
                                                   "clifford",
                                                   "regular",
                                                   "inverse",
                                                   "left-identities",
                                                   "right-identities",
                                                   "aperiodic"};
    return names;
  }

  PropertyReport definitional_check(ElementTable const& table,
                                    std::string_view    property) {
    if (property == "commutative") {
      return commutative(table);
    } else if (property == "band") {
      return band(table, "band");
    } else if (property == "semilattice") {
      auto r = band(table, "semilattice");
      if (!r.holds()) {
        return r;
      }
      r          = commutative(table);
      r.property = "semilattice";
      return r;
    } else if (property == "group") {
      return group(table);
    } else if (property == "left-zero") {
      return zero_report(table, property, find_left_zero(table), "left_zero");
    } else if (property == "right-zero") {
      return zero_report(
          table, property, find_right_zero(table), "right_zero");
    } else if (property == "zero") {
      return zero_report(table, property, find_zero(table), "zero");
    } else if (property == "nilpotent") {
      return nilpotent(table);
    } else if (property == "r-trivial") {
      return r_trivial(table);
    } else if (property == "idempotents-commute") {
      return idempotents_commute(table, property);
    } else if (property == "idempotents-central") {
      return idempotents_central(table);
    } else if (property == "orthodox") {
      return orthodox(table);
    } else if (property == "completely-regular") {
      return completely_regular(table, property);
    } else if (property == "clifford") {
      return clifford(table);
    } else if (property == "regular") {
      return regular(table);
    } else if (property == "inverse") {
      return inverse(table);
    } else if (property == "left-identities") {
      return identities_report(table, property, oracle_left_identities(table));
    } else if (property == "right-identities") {
      return identities_report(
          table, property, oracle_right_identities(table));
    } else if (property == "aperiodic") {
      return aperiodic(table);
    }
    throw UnknownProperty("unknown property '" + std::string(property) + "'");
  }

  std::optional<std::size_t> nilpotency_degree(ElementTable const& table) {
    auto z = find_zero(table);
    if (!z) {
      return std::nullopt;
    }
    // S^d is the set of elements with a word of length >= d, so
    // S^(d+1) = { x * a : x in S^d, a a generator }.
    std::vector<bool> current(table.size(), true);
    std::size_t       count = table.size();
    for (std::size_t d = 1;; ++d) {
      if (count == 1 && current[*z]) {
        return d;
      }
      std::vector<bool> next(table.size(), false);
      std::size_t       next_count = 0;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (!current[i]) {
          continue;
        }
        for (std::size_t g = 0; g < table.generators().size(); ++g) {
          auto j = table.right(i, g);
          if (!next[j]) {
            next[j] = true;
            ++next_count;
          }
        }
      }
      if (next == current) {
        return std::nullopt;
      }
      current = std::move(next);
      count   = next_count;
    }
  }

  std::vector<std::size_t> oracle_left_identities(ElementTable const& table) {
    std::vector<std::size_t> result;
    for (std::size_t l = 0; l < table.size(); ++l) {
      auto const& lv = table.element(l);
      bool        ok = true;
      for (std::size_t s = 0; s < table.size() && ok; ++s) {
        ok = (lv * table.element(s) == table.element(s));
      }
      if (ok) {
        result.push_back(l);
      }
    }
    return result;
  }

  std::vector<std::size_t> oracle_right_identities(ElementTable const& table) {
    std::vector<std::size_t> result;
    for (std::size_t r = 0; r < table.size(); ++r) {
      auto const& rv = table.element(r);
      bool        ok = true;
      for (std::size_t s = 0; s < table.size() && ok; ++s) {
        ok = (table.element(s) * rv == table.element(s));
      }
      if (ok) {
        result.push_back(r);
      }
    }
    return result;
  }

  std::optional<std::vector<std::size_t>>
  oracle_counterexample(ElementTable const& table, QuasiIdentity const& qid) {
    qid.validate();
    if (qid.variables > 0 && table.size() == 0) {
      return std::nullopt;
    }
    std::vector<std::size_t> all(table.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      all[i] = i;
    }
    std::vector<std::vector<std::size_t> const*> domain;
    for (std::size_t x = 0; x < qid.variables; ++x) {
      domain.push_back(qid.idempotent[x] ? &table.idempotents() : &all);
      if (domain.back()->empty()) {
        return std::nullopt;
      }
    }
    auto const               n = table.generators().degree();
    std::vector<std::size_t> odometer(qid.variables, 0);
    std::vector<std::size_t> assignment(qid.variables);
    while (true) {
      for (std::size_t x = 0; x < qid.variables; ++x) {
        assignment[x] = (*domain[x])[odometer[x]];
      }
      for (Point q = 0; q < n; ++q) {
        Point a = q, b = q;
        for (auto x : qid.lhs) {
          a = table.element(assignment[x])[a];
        }
        for (auto x : qid.rhs) {
          b = table.element(assignment[x])[b];
        }
        if (a != b) {
          return assignment;
        }
      }
      // Advance; the last variable varies fastest.
      std::size_t x = qid.variables;
      while (x > 0) {
        --x;
        if (++odometer[x] < domain[x]->size()) {
          break;
        }
        odometer[x] = 0;
        if (x == 0) {
          return std::nullopt;
        }
      }
    }
  }

  PropertyReport oracle_models(ElementTable const&  table,
                               QuasiIdentity const& qid,
                               std::string          property) {
    auto counter = oracle_counterexample(table, qid);
    auto r       = make(property, !counter.has_value());
    if (counter) {
      r.witness = element_witness(table, "identity_assignment", *counter);
      r.witness->note = to_string(qid);
      r.message       = "an assignment violates " + to_string(qid);
    }
    return r;
  }

}  // namespace tsprops
