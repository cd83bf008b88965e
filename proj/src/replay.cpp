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

#include "tsprops/replay.hpp"

#include <algorithm>  // for sort, all_of
#include <set>        // for set
#include <utility>    // for move

#include "tsprops/graph.hpp"          // for transformation_graph
#include "tsprops/pspace_search.hpp"  // for search_mode

namespace tsprops {

  namespace {

    struct Rejected {
      std::string why;
    };

    void require(bool ok, std::string const& why) {
      if (!ok) {
        throw Rejected{why};
      }
    }

    class Replayer {
     public:
      Replayer(GeneratorSet const&   gens,
               PropertyReport const& report,
               ElementTable const*   table,
               QuasiIdentity const*  qid)
          : _gens(gens), _r(report), _w(*report.witness), _table(table),
            _qid(qid) {}

      ReplayStatus run() {
        auto const& k = _w.kind;
        auto const  n = _gens.degree();
        for (auto q : _w.points) {
          require(q < n, "point out of range");
        }
        for (auto const& w : _w.words) {
          for (auto g : w) {
            require(g < _gens.size(), "generator index out of range");
          }
        }
        for (auto const& e : _w.elements) {
          require(e.degree() == n, "element of the wrong degree");
        }
        if (k == "quasi_identity_counterexample" || k == "identity_assignment") {
          return quasi_identity();
        }
        if (k != "r_class_cycle" && k != "nilpotent") {
          // Whenever both are listed, word i evaluates to element i.
          for (std::size_t i = 0; i < _w.words.size() && i < _w.elements.size();
               ++i) {
            require(!_w.words[i].empty() && _gens.evaluate(_w.words[i]) == _w.elements[i],
                    "word " + std::to_string(i + 1)
                        + " does not evaluate to its element");
          }
        }
        if (k == "noncommuting_generators") {
          expect(Verdict::False);
          auto [i, j] = gen_pair();
          auto q      = point(0);
          require(_gens[j][_gens[i][q]] != _gens[i][_gens[j][q]],
                  "the generators agree at the point");
        } else if (k == "non_idempotent_generator") {
          expect(Verdict::False);
          auto const& a = _gens[gen(0)];
          auto        q = point(0);
          require(a[a[q]] != a[q], "the generator is idempotent at the point");
        } else if (k == "group_image_mismatch") {
          expect(Verdict::False);
          auto [i, j] = gen_pair();
          auto q      = point(0);
          require(contains(image(_gens[i]), q) && !contains(image(_gens[j]), q),
                  "the images agree at the point");
        } else if (k == "group_not_permutation_on_image") {
          expect(Verdict::False);
          auto const& a = _gens[gen(0)];
          auto        p = point(0), q = point(1);
          require(a[p] != a[q] && a[a[p]] == a[a[q]],
                  "no two image points are merged");
        } else if (k == "group_kernel_mismatch") {
          expect(Verdict::False);
          auto [i, j] = gen_pair();
          auto p = point(0), q = point(1);
          require((_gens[i][p] == _gens[i][q]) != (_gens[j][p] == _gens[j][q]),
                  "the kernels agree on the pair");
        } else if (k == "left_zero") {
          expect(Verdict::True);
          require(left_zero(element(0)), "not a left zero");
        } else if (k == "right_zero") {
          expect(Verdict::True);
          require(right_zero(element(0)), "not a right zero");
        } else if (k == "zero") {
          expect(Verdict::True);
          require(left_zero(element(0)) && right_zero(element(0)),
                  "not a zero");
        } else if (k == "nilpotent") {
          return nilpotent();
        } else if (k == "non_collapsible_pair") {
          expect(Verdict::False);
          auto p = point(0), q = point(1);
          auto comps = undirected_components(transformation_graph(_gens));
          require(p != q && comps.same_class(p, q),
                  "the points are not connected");
          if (!_table) {
            return ReplayStatus::not_applicable;
          }
          for (std::size_t s = 0; s < _table->size(); ++s) {
            require(_table->element(s)[p] != _table->element(s)[q],
                    "some element collapses the pair");
          }
        } else if (k == "stuck_point") {
          expect(Verdict::False);
          auto       q     = point(0);
          auto const fixed = fixed_points(_gens);
          if (!_table) {
            return ReplayStatus::not_applicable;
          }
          for (std::size_t s = 0; s < _table->size(); ++s) {
            require(!contains(fixed, _table->element(s)[q]),
                    "some element sends the point to a fixed point");
          }
        } else if (k == "cycle_outside_zero_image") {
          expect(Verdict::False);
          auto const fixed = fixed_points(_gens);
          closed_walk(1);
          for (auto q : _w.points) {
            require(!contains(fixed, q), "the cycle meets a fixed point");
          }
        } else if (k == "r_class_cycle") {
          return r_class_cycle();
        } else if (k == "not_permutation_on_image") {
          expect(Verdict::False);
          require(_w.points.size() == 4 && _w.words.size() == 1,
                  "malformed witness");
          auto const& w = _w.words[0];
          auto const  p = _w.points[0], q = _w.points[1], u = _w.points[2],
                     v = _w.points[3];
          require(!w.empty() && _gens.act(p, w) == u && _gens.act(q, w) == v,
                  "the word does not reach the image points");
          require(u != v && _gens.act(u, w) == _gens.act(v, w),
                  "the image points are not collapsed");
        } else if (k == "left_identities" || k == "right_identities") {
          return identities(k == "left_identities");
        } else if (k == "non_regular_element") {
          expect(Verdict::False);
          auto const& s = element(0);
          if (!_table) {
            return ReplayStatus::not_applicable;
          }
          require(_table->index_of(s).has_value(), "the element is not in S");
          for (std::size_t t = 0; t < _table->size(); ++t) {
            require(s * _table->element(t) * s != s, "the element is regular");
          }
        } else if (k == "noncommuting_elements") {
          expect(Verdict::False);
          require(element(0) * element(1) != element(1) * element(0),
                  "the elements commute");
        } else if (k == "non_idempotent_element") {
          expect(Verdict::False);
          require(!is_idempotent(element(0)), "the element is idempotent");
        } else if (k == "distinct_idempotents") {
          expect(Verdict::False);
          require(element(0) != element(1) && is_idempotent(element(0))
                      && is_idempotent(element(1)),
                  "not two distinct idempotents");
        } else if (k == "identity_fails") {
          expect(Verdict::False);
          auto const &e = element(0), &s = element(1);
          require(is_idempotent(e) && (e * s != s || s * e != s),
                  "the idempotent acts as an identity");
        } else if (k == "no_inverse_power" || k == "not_in_subgroup") {
          expect(Verdict::False);
          require(!in_subgroup(element(0)), "the element lies in a subgroup");
        } else if (k == "identity_element") {
          expect(Verdict::True);
          auto const& e = element(0);
          for (auto const& a : _gens.generators()) {
            require(e * a == a && a * e == a, "not an identity");
          }
        } else if (k == "nonzero_idempotent") {
          expect(Verdict::False);
          auto const &e = element(0), &z = element(1);
          require(is_idempotent(e) && e != z && left_zero(z) && right_zero(z),
                  "not an idempotent besides the zero");
        } else if (k == "r_related_pair") {
          expect(Verdict::False);
          require(_w.words.size() == 4, "malformed witness");
          auto const &s = element(0), &t = element(1);
          require(s != t, "the elements coincide");
          require(s * _gens.evaluate(_w.words[2]) == t
                      && t * _gens.evaluate(_w.words[3]) == s,
                  "the elements are not R-related");
        } else if (k == "noncommuting_idempotents") {
          expect(Verdict::False);
          require(is_idempotent(element(0)) && is_idempotent(element(1))
                      && element(0) * element(1) != element(1) * element(0),
                  "not two noncommuting idempotents");
        } else if (k == "noncentral_idempotent") {
          expect(Verdict::False);
          require(is_idempotent(element(0))
                      && element(0) * element(1) != element(1) * element(0),
                  "not a noncentral idempotent");
        } else if (k == "non_idempotent_product") {
          expect(Verdict::False);
          require(is_idempotent(element(0)) && is_idempotent(element(1))
                      && !is_idempotent(element(0) * element(1)),
                  "the product is idempotent");
        } else if (k == "two_inverses") {
          expect(Verdict::False);
          auto const &s = element(0), &t = element(1), &u = element(2);
          require(t != u, "the inverses coincide");
          for (auto const* x : {&t, &u}) {
            require(s * *x * s == s && *x * s * *x == *x, "not an inverse");
          }
        } else if (k == "element_search") {
          expect(Verdict::True);
          auto const &t = element(0), &s = element(1);
          auto const  mode = search_mode(_w.note);
          bool const  reg  = s * t * s == s, weak = t * s * t == t;
          require(mode == SearchMode::regularizer    ? reg
                  : mode == SearchMode::weak_inverse ? weak
                                                     : reg && weak,
                  "the found element does not satisfy the equations");
        } else if (k == "nontrivial_group_power") {
          expect(Verdict::False);
          auto const e = idempotent_power(element(0));
          require(e * element(0) != e, "the powers of the element stabilize");
        } else {
          throw Rejected{"unknown witness kind '" + k + "'"};
        }
        return ReplayStatus::verified;
      }

     private:
      void expect(Verdict v) const {
        require(_r.verdict == v, "witness kind does not match the verdict");
      }

      Point point(std::size_t i) const {
        require(i < _w.points.size(), "missing point");
        return _w.points[i];
      }

      std::size_t gen(std::size_t i) const {
        require(i < _w.indices.size() && _w.indices[i] < _gens.size(),
                "missing generator index");
        return _w.indices[i];
      }

      std::pair<std::size_t, std::size_t> gen_pair() const {
        return {gen(0), gen(1)};
      }

      Transformation const& element(std::size_t i) const {
        require(i < _w.elements.size(), "missing element");
        return _w.elements[i];
      }

      bool left_zero(Transformation const& z) const {
        return std::all_of(_gens.generators().begin(),
                           _gens.generators().end(),
                           [&z](auto const& a) { return z * a == z; });
      }

      bool right_zero(Transformation const& z) const {
        return std::all_of(_gens.generators().begin(),
                           _gens.generators().end(),
                           [&z](auto const& a) { return a * z == z; });
      }

      // points is a closed walk along the generators in indices.
      void closed_walk(std::size_t min_length) const {
        auto const& p = _w.points;
        require(p.size() >= min_length + 1 && p.front() == p.back()
                    && _w.indices.size() + 1 == p.size(),
                "malformed cycle");
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
          require(_w.indices[i] < _gens.size()
                      && _gens[_w.indices[i]][p[i]] == p[i + 1],
                  "a cycle edge is not realized by its generator");
        }
      }

      ReplayStatus nilpotent() {
        expect(Verdict::True);
        require(_w.words.size() == 1, "malformed witness");
        auto const& z = element(0);
        require(_gens.evaluate(_w.words[0]) == z, "word does not give the zero");
        require(left_zero(z) && right_zero(z), "not a zero");
        auto const bound = _w.bound;
        require(bound >= 1 && bound <= _gens.degree(),
                "degree bound out of range");
        if (_table) {
          auto const d = nilpotency_degree(*_table);
          require(d.has_value(), "S is not nilpotent");
          require(_r.engine == Engine::oracle ? *d == bound : *d <= bound,
                  "the degree is wrong");
        }
        return ReplayStatus::verified;
      }

      ReplayStatus r_class_cycle() {
        expect(Verdict::False);
        require(_w.words.size() == 3 && _w.elements.size() == 2
                    && _w.indices.size() == 1,
                "malformed witness");
        auto const& p = _w.points;
        require(p.size() >= 3 && p.front() == p.back(), "cycle too short");
        for (std::size_t i = 0; i + 2 < p.size(); ++i) {
          for (std::size_t j = i + 1; j + 1 < p.size(); ++j) {
            require(p[i] != p[j], "cycle repeats a point");
          }
        }
        auto const e = _gens.evaluate(_w.words[0]);
        auto const f = _gens.evaluate(_w.words[1]);
        auto const g = _gens.evaluate(_w.words[2]);
        require(e == element(0) && f == element(1),
                "the words do not give the listed elements");
        require(f == e * _gens[gen(0)], "f is not e times the generator");
        require(e != f && f * g == e, "the elements are not R-related");
        return ReplayStatus::verified;
      }

      ReplayStatus identities(bool left) {
        expect(verdict_of(!_w.elements.empty()));
        for (auto const& x : _w.elements) {
          for (auto const& a : _gens.generators()) {
            require(left ? x * a == a : a * x == a,
                    left ? "not a left identity" : "not a right identity");
          }
        }
        if (!_table) {
          return ReplayStatus::verified;
        }
        auto const found = left ? oracle_left_identities(*_table)
                                : oracle_right_identities(*_table);
        std::set<Transformation> all, listed(_w.elements.begin(),
                                             _w.elements.end());
        for (auto i : found) {
          all.insert(_table->element(i));
        }
        require(all == listed, "the list is incomplete");
        return ReplayStatus::verified;
      }

      ReplayStatus quasi_identity() {
        expect(Verdict::False);
        auto const qid = _qid ? *_qid : parse_quasi_identity(_w.note);
        require(_w.elements.size() == qid.variables, "one element per variable");
        for (std::size_t x = 0; x < qid.variables; ++x) {
          auto const& e = _w.elements[x];
          if (x < _w.words.size()) {
            auto v = _gens.evaluate(_w.words[x]);
            if (_w.kind == "quasi_identity_counterexample" && qid.idempotent[x]) {
              v = idempotent_power(v);
            }
            require(v == e, "word does not give its element");
          }
          require(!qid.idempotent[x] || is_idempotent(e),
                  "a constrained variable is not idempotent");
        }
        auto const side = [this](std::vector<std::size_t> const& w) {
          auto t = _w.elements[w[0]];
          for (std::size_t i = 1; i < w.size(); ++i) {
            t = t * _w.elements[w[i]];
          }
          return t;
        };
        auto const u = side(qid.lhs), v = side(qid.rhs);
        require(u != v, "both sides agree");
        if (_w.kind == "quasi_identity_counterexample") {
          auto const p = point(0);
          require(u[p] != v[p], "the sides agree at the first point");
        }
        return ReplayStatus::verified;
      }

      GeneratorSet const&   _gens;
      PropertyReport const& _r;
      Witness const&        _w;
      ElementTable const*   _table;
      QuasiIdentity const*  _qid;
    };

  }  // namespace

  ReplayResult replay(GeneratorSet const&   gens,
                      PropertyReport const& report,
                      ElementTable const*   table,
                      QuasiIdentity const*  qid) {
    if (!report.witness) {
      return {ReplayStatus::not_applicable, "no witness"};
    }
    try {
      auto const status = Replayer(gens, report, table, qid).run();
      return {status, status == ReplayStatus::verified ? "" : "needs the element table"};
    } catch (Rejected const& e) {
      return {ReplayStatus::failed, report.witness->kind + ": " + e.why};
    } catch (Error const& e) {
      return {ReplayStatus::failed, report.witness->kind + ": " + e.what()};
    }
  }

}  // namespace tsprops
