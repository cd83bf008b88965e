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

// Acceptance driver: one PASS/FAIL line per criterion.  A criterion whose
// statement is contradicted by verified counterexamples is reported FAIL
// with the counterexamples characterized; the exit status is 1 only for
// failures outside such a characterization.  The optional argument is the
// path of the tsprops executable, used for the determinism check on the
// command line.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tsprops/crosscheck.hpp"
#include "tsprops/graph.hpp"
#include "tsprops/identity_engine.hpp"
#include "tsprops/nl_checks.hpp"
#include "tsprops/oracle.hpp"
#include "tsprops/pspace_search.hpp"
#include "tsprops/quasi_identity.hpp"
#include "tsprops/reductions.hpp"
#include "tsprops/replay.hpp"

using namespace tsprops;

namespace {

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  // Set by a failure that is not a documented counterexample to the
  // criterion itself.
  bool unexplained_failure = false;

  void verdict(int                criterion,
               bool               ok,
               std::string const& detail,
               std::optional<bool> unexplained = std::nullopt) {
    unexplained_failure = unexplained_failure || unexplained.value_or(!ok);
    std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL")
              << "  " << detail << std::endl;
  }

  // Tallies for criteria 6 and 8 collected along the way.
  struct Ledger {
    std::size_t nilpotent        = 0;
    std::size_t bound_failures   = 0;
    std::size_t witnesses        = 0;
    std::size_t replay_failures  = 0;
    std::size_t unverified       = 0;
    std::vector<std::string> notes;

    void note(std::string s) {
      if (notes.size() < 10) {
        notes.push_back(std::move(s));
      }
    }

    void replayed(GeneratorSet const&   gens,
                  PropertyReport const& r,
                  ElementTable const&   table) {
      if (!r.witness) {
        return;
      }
      ++witnesses;
      auto const res = replay(gens, r, &table);
      if (res.failed()) {
        ++replay_failures;
        note(r.property + " witness: " + res.detail);
      } else if (res.status != ReplayStatus::verified) {
        ++unverified;
        note(r.property + " witness not checkable");
      }
    }

    void degree(GeneratorSet const& gens, ElementTable const& table) {
      auto const d = nilpotency_degree(table);
      if (!d) {
        return;
      }
      ++nilpotent;
      auto const bound = nilpotency_degree_upper_bound(gens);
      if (*d > bound || bound > gens.degree()) {
        ++bound_failures;
        note("degree " + std::to_string(*d) + " bound " + std::to_string(bound));
      }
    }
  };

  Ledger ledger;

  ////////////////////////////////////////////////////////////////////////
  // Automata
  ////////////////////////////////////////////////////////////////////////

  // Calls f on every DFA with the given number of states and letters: all
  // letter maps, initial states and final-state sets.
  void for_each_dfa(std::size_t n,
                    std::size_t k,
                    std::function<void(DFA const&)> const& f) {
    auto const maps = all_transformations(n);
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      DFA d;
      d.states = n;
      for (auto i : pick) {
        d.letters.push_back(maps[i]);
      }
      for (Point q0 = 0; q0 < n; ++q0) {
        d.initial = q0;
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
          d.final.clear();
          for (Point q = 0; q < n; ++q) {
            if (mask >> q & 1) {
              d.final.push_back(q);
            }
          }
          f(d);
        }
      }
      std::size_t i = k;
      while (true) {
        if (i == 0) {
          return;
        }
        --i;
        if (++pick[i] < maps.size()) {
          break;
        }
        pick[i] = 0;
      }
    }
  }

  // Some word (the empty one included) is accepted by every DFA; decided by
  // breadth-first search over the product automaton.
  bool intersection_nonempty(std::vector<DFA> const& ds) {
    std::vector<Point> start;
    for (auto const& d : ds) {
      start.push_back(d.initial);
    }
    std::set<std::vector<Point>>   seen{start};
    std::vector<std::vector<Point>> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto const state    = queue[head];
      bool       accepted = true;
      for (std::size_t j = 0; j < ds.size(); ++j) {
        accepted = accepted && contains(ds[j].final, state[j]);
      }
      if (accepted) {
        return true;
      }
      for (std::size_t a = 0; a < ds[0].letters.size(); ++a) {
        auto next = state;
        for (std::size_t j = 0; j < ds.size(); ++j) {
          next[j] = ds[j].letters[a][state[j]];
        }
        if (seen.insert(next).second) {
          queue.push_back(next);
        }
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Criteria 1, 2, 5, 6, 8, 9 via the cross-checker
  ////////////////////////////////////////////////////////////////////////

  CrosscheckSummary exhaustive_run() {
    CrosscheckOptions o;
    o.exhaustive     = true;
    o.max_degree     = 3;
    o.max_generators = 2;
    return crosscheck(o);
  }

  CrosscheckSummary random_run() {
    CrosscheckOptions o;
    o.max_degree     = 6;
    o.max_generators = 3;
    o.samples        = 1000;
    o.seed           = 42;
    o.oracle_cap     = 50000;
    return crosscheck(o);
  }

  std::string summary_line(CrosscheckSummary const& s, double secs) {
    std::ostringstream out;
    out << s.instances << " instances, " << s.skipped << " skipped, "
        << s.checks << " checks, " << s.disagreements << " disagreements, "
        << secs << " s";
    for (auto const& f : s.failures) {
      out << "\n    " << f.property << ": " << f.reason;
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Criterion 3 (and its share of 6, 7 and 8)
  ////////////////////////////////////////////////////////////////////////

  // The stated equivalences fail on three degenerate DFA families, each
  // exactly where the construction's correctness argument breaks:
  //   zero        no final state and every letter fixes the initial state
  //   left zero   the initial state is not final and every letter fixes it
  //               (it is then a second common fixed point)
  //   right zero  no final state (the sink is then a separate component)
  // and on digraphs whose only cycles are self-loops.  Violations inside
  // these families are counted as known; any other one is unexplained.
  struct DfaTally {
    std::size_t zero_instances = 0;
    std::size_t nil_instances  = 0;
    std::map<std::string, std::size_t> known;  // by property
    std::size_t unexplained    = 0;
    std::size_t absorb_checked = 0;
    std::size_t absorb_failed  = 0;
  };

  DfaTally absorb;  // filled by criterion 3, reported by criterion 7

  bool known_zero_exception(DFA const& d, std::string const& property) {
    bool fixes_initial = true;
    for (auto const& a : d.letters) {
      fixes_initial = fixes_initial && a[d.initial] == d.initial;
    }
    bool const no_final = d.final.empty();
    if (property == "zero") {
      return no_final && fixes_initial;
    }
    if (property == "left-zero") {
      return fixes_initial && !contains(d.final, d.initial);
    }
    return no_final;
  }

  void check_zero_reduction(DFA const& d, DfaTally& t) {
    auto const gens  = dfa_emptiness_to_zero(d);
    auto const table = ElementTable::enumerate(gens);
    bool const empty = language_is_empty(d);
    ++t.zero_instances;
    for (auto const& r : {has_zero(gens), has_left_zero(gens), has_right_zero(gens)}) {
      bool const o = definitional_check(table, r.property).holds();
      if (r.holds() != o) {
        ++t.unexplained;
        ledger.note("zero reduction: checker disagrees with the oracle on "
                    + r.property);
      } else if (o == empty) {
        if (known_zero_exception(d, r.property)) {
          ++t.known[r.property];
        } else {
          ++t.unexplained;
          ledger.note("zero reduction: " + r.property);
        }
      }
      ledger.replayed(gens, r, table);
    }
    ledger.degree(gens, table);
  }

  void check_nil_reduction(DFA const& d, DfaTally& t) {
    if (contains(d.final, d.initial)) {
      return;
    }
    auto const gens  = dfa_emptiness_to_nilpotent(d);
    auto const table = ElementTable::enumerate(gens);
    bool const empty = language_is_empty(d);
    ++t.nil_instances;
    auto const r = is_nilpotent(gens);
    if (r.holds() != empty || definitional_check(table, "nilpotent").holds() != empty) {
      ++t.unexplained;
      ledger.note("nilpotent reduction");
    }
    ledger.replayed(gens, r, table);
    ledger.degree(gens, table);
    // Every square is zero exactly for the empty language.
    auto const absorbs = models(gens, preset("square_absorbs"));
    ++t.absorb_checked;
    if (absorbs.holds() != empty
        || oracle_counterexample(table, preset("square_absorbs")).has_value() == empty) {
      ++t.absorb_failed;
      ledger.note("square_absorbs on a nilpotent-reduction output");
    }
    ledger.replayed(gens, absorbs, table);
  }

  struct DigraphTally {
    std::size_t graphs      = 0;
    std::size_t loop_only   = 0;  // cyclic, but every cycle is a self-loop
    std::size_t known       = 0;  // violations among those
    std::size_t unexplained = 0;
  };

  void check_digraph(InputDigraph const& g, DigraphTally& t) {
    auto const gens  = digraph_to_semigroup(g);
    auto const table = ElementTable::enumerate(gens);
    Digraph    graph(g.vertices);
    for (auto [v, w] : g.edges) {
      graph.add_edge(v, w);
    }
    bool const cyclic    = has_cycle(graph, CycleMode::strict);
    bool const loop_only = cyclic && !has_cycle(graph, CycleMode::ignore_self_loops);
    ++t.graphs;
    t.loop_only += loop_only;

    auto const nil     = is_nilpotent(gens);
    auto const rtriv   = is_r_trivial(gens);
    auto const central = idempotents_central(gens);
    bool const o_nil     = definitional_check(table, "nilpotent").holds();
    bool const o_rtriv   = definitional_check(table, "r-trivial").holds();
    bool const o_central = definitional_check(table, "idempotents-central").holds();
    for (auto const* r : {&nil, &rtriv, &central}) {
      ledger.replayed(gens, *r, table);
    }
    ledger.degree(gens, table);
    if (nil.holds() != o_nil || rtriv.holds() != o_rtriv
        || central.holds() != o_central) {
      ++t.unexplained;
      ledger.note("digraph checker disagrees with the oracle");
      return;
    }
    bool const holds = cyclic ? !(o_nil || o_rtriv || o_central) : o_nil;
    if (!holds) {
      if (loop_only) {
        ++t.known;
      } else {
        ++t.unexplained;
        ledger.note("digraph reduction");
      }
    }
  }

  void criterion_3() {
    auto const start = Clock::now();
    DfaTally   dt;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t k = 1; k <= 2; ++k) {
        for_each_dfa(n, k, [&dt](DFA const& d) {
          check_zero_reduction(d, dt);
          check_nil_reduction(d, dt);
        });
      }
    }
    DigraphTally gt;
    for (std::size_t v = 1; v <= 4; ++v) {
      std::size_t const slots = v * v;
      for (std::size_t mask = 1; mask < (std::size_t(1) << slots); ++mask) {
        InputDigraph g;
        g.vertices = v;
        for (std::size_t e = 0; e < slots; ++e) {
          if (mask >> e & 1) {
            g.edges.emplace_back(static_cast<Point>(e / v), static_cast<Point>(e % v));
          }
        }
        check_digraph(g, gt);
      }
    }
    std::size_t known = gt.known;
    for (auto const& [p, c] : dt.known) {
      known += c;
    }
    auto const unexplained = dt.unexplained + gt.unexplained;
    std::ostringstream out;
    out << dt.zero_instances << " DFAs (zero), " << dt.nil_instances
        << " DFAs (nilpotent), " << gt.graphs << " digraphs; "
        << unexplained << " unexplained failures; " << known
        << " violations of the stated claims, all in degenerate families:"
        << " zero " << dt.known["zero"] << ", left-zero " << dt.known["left-zero"]
        << ", right-zero " << dt.known["right-zero"]
        << " (no final state, or initial state fixed by every letter),"
        << " digraphs " << gt.known << " of " << gt.loop_only
        << " whose only cycles are self-loops; " << seconds_since(start) << " s";
    verdict(3, known + unexplained == 0, out.str(), unexplained > 0);
    absorb = dt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Criterion 4
  ////////////////////////////////////////////////////////////////////////

  DFA random_dfa(std::mt19937_64& rng, std::size_t letters) {
    DFA d;
    d.states  = 1 + rng() % 3;
    d.initial = static_cast<Point>(rng() % d.states);
    d.final   = {static_cast<Point>(rng() % d.states)};
    for (std::size_t a = 0; a < letters; ++a) {
      std::vector<Point> images(d.states);
      for (auto& x : images) {
        x = static_cast<Point>(rng() % d.states);
      }
      d.letters.emplace_back(std::move(images));
    }
    return d;
  }

  void criterion_4() {
    auto const      start = Clock::now();
    std::mt19937_64 rng(42);
    std::size_t     instances = 0, nonempty = 0, failures = 0;
    for (; instances < 300; ++instances) {
      auto const       letters = 1 + rng() % 2;
      std::vector<DFA> ds;
      auto const       count = 1 + rng() % 2;
      for (std::size_t j = 0; j < count; ++j) {
        ds.push_back(random_dfa(rng, letters));
      }
      bool const expected = intersection_nonempty(ds);
      nonempty += expected;
      auto const reg  = dfa_intersection_to_regular(ds);
      auto const weak = dfa_intersection_to_weak_inverse(ds);
      auto const r    = find_regularizer(reg.gens, reg.gens[reg.target]);
      auto const w    = find_weak_inverse(weak.gens, weak.target);
      bool       ok   = r.found.has_value() == expected
                && w.found.has_value() == expected
                && r.verdict != Verdict::Undecided
                && w.verdict != Verdict::Undecided;
      auto const& b = reg.gens[reg.target];
      if (r.found) {
        ok = ok && reg.gens.evaluate(r.found->word) == r.found->element
             && b * r.found->element * b == b;
      }
      if (w.found) {
        auto const& t = w.found->element;
        ok = ok && weak.gens.evaluate(w.found->word) == t
             && t * weak.target * t == t;
      }
      for (auto const& report :
           {element_search_report(reg.gens, b, SearchMode::regularizer),
            element_search_report(weak.gens, weak.target, SearchMode::weak_inverse)}) {
        if (report.witness) {
          ++ledger.witnesses;
          auto const res = replay(report.property == "regularizer" ? reg.gens
                                                                   : weak.gens,
                                  report);
          if (res.status != ReplayStatus::verified) {
            ++ledger.replay_failures;
            ledger.note("element search witness: " + res.detail);
          }
        }
      }
      failures += !ok;
    }
    std::ostringstream out;
    out << instances << " intersection instances (" << nonempty
        << " nonempty), " << failures << " failures, " << seconds_since(start)
        << " s";
    verdict(4, failures == 0 && instances >= 200, out.str());
  }

  ////////////////////////////////////////////////////////////////////////
  // Criterion 7
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> const ad_hoc = {
      "x1 x2 = x2 x1",
      "x1 x1 = x1",
      "x1 x2 x1 = x1",
      "x1 x2 x1 = x2 x1",
      "x1 x2 = x1",
      "x1 x2 = x2",
      "x1 x1 x1 = x1",
      "x1 x1 x2 = x1 x1",
      "x1 x2 x2 = x2 x1",
      "x1 x2 x3 = x1 x3",
      "x1 x2 x3 = x3 x2",
      "x1 x1 = x2 x2",
      "x1 x1 x1 = x1 x1",
      "idem(x1) => x1 x2 = x2 x1",
      "idem(x1) => x1 x2 = x2",
      "idem(x1) => x2 x1 = x2",
      "idem(x1,x2) => x1 x2 x1 = x1",
      "idem(x1,x2) => x1 x2 = x1",
      "idem(x2) => x1 x2 = x1",
      "idem(x1) => x1 x2 x1 = x1 x2"};

  void criterion_7(DfaTally const& dt) {
    auto const                 start = Clock::now();
    std::vector<QuasiIdentity> qids;
    for (auto const& name : preset_names()) {
      qids.push_back(preset(name));
    }
    for (auto const& text : ad_hoc) {
      auto const q = parse_quasi_identity(text);
      if (q.lhs.size() + q.rhs.size() > 5) {
        throw Error("ad-hoc quasi-identity too long: " + text);
      }
      qids.push_back(q);
    }
    std::size_t instances = 0, checks = 0, failures = 0;
    for (std::size_t k = 1; k <= 2; ++k) {
      for_each_generator_set(3, k, [&](GeneratorSet const& gens) {
        ++instances;
        auto const table = ElementTable::enumerate(gens);
        for (auto const& q : qids) {
          auto const r = models(gens, q);
          ++checks;
          if (r.holds() == oracle_counterexample(table, q).has_value()) {
            ++failures;
            ledger.note("models disagrees on " + to_string(q));
          }
          ledger.replayed(gens, r, table);
        }
      });
    }
    std::ostringstream out;
    out << qids.size() << " quasi-identities on " << instances
        << " instances, " << checks << " checks, " << failures
        << " failures; square_absorbs separated " << dt.absorb_checked
        << " nilpotent-reduction outputs with " << dt.absorb_failed
        << " failures, " << seconds_since(start) << " s";
    verdict(7, failures == 0 && instances == 756 && dt.absorb_failed == 0
                   && dt.absorb_checked > 0,
            out.str());
  }

  ////////////////////////////////////////////////////////////////////////
  // Criterion 9
  ////////////////////////////////////////////////////////////////////////

  std::string run_command(std::string const& cmd) {
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) {
      return {};
    }
    std::string           out;
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), pipe.get())) {
      out.append(buf.data(), n);
    }
    return out;
  }

  void criterion_9(std::string const& exe) {
    CrosscheckOptions o;
    o.max_degree     = 5;
    o.max_generators = 3;
    o.samples        = 200;
    o.seed           = 42;
    auto const a = to_json(crosscheck(o)).dump(2);
    auto const b = to_json(crosscheck(o)).dump(2);
    bool       ok = a == b;
    std::string detail = "library summaries identical: " + std::string(ok ? "yes" : "no");
    if (!exe.empty()) {
      auto const cmd
          = exe + " crosscheck --n 5 --k 3 --samples 200 --seed 42 --json";
      auto const x = run_command(cmd);
      auto const y = run_command(cmd);
      bool const cli_ok = !x.empty() && x == y;
      ok                = ok && cli_ok;
      detail += ", command-line JSON byte-identical: "
                + std::string(cli_ok ? "yes" : "no") + " ("
                + std::to_string(x.size()) + " bytes)";
    }
    verdict(9, ok, detail);
  }

}  // namespace

int main(int argc, char** argv) {
  std::string const exe = argc > 1 ? argv[1] : "";

  auto       start = Clock::now();
  auto const ex    = exhaustive_run();
  verdict(1, ex.passed() && ex.instances == 756 && ex.skipped == 0,
          summary_line(ex, seconds_since(start)));

  start          = Clock::now();
  auto const rnd = random_run();
  verdict(2, rnd.passed() && rnd.instances >= 1000 && rnd.skipped == 0,
          summary_line(rnd, seconds_since(start)));

  criterion_3();
  criterion_4();

  {
    std::size_t t4 = 0, bad = 0;
    for (auto const& s : all_transformations(4)) {
      auto const t = canonical_weak_inverse(s).element;
      ++t4;
      bad += t * s * t != t;
    }
    auto const s  = Transformation::from_one_based(std::vector<long long>{1, 1, 2});
    auto const s3 = power(s, 3);
    bool const counterexample = s * s * s != s && s3 * s * s3 == s3
                                && canonical_weak_inverse(s).element == s3;
    auto const elements = ex.elements_checked + rnd.elements_checked;
    auto const failures = ex.weak_inverse_failures + rnd.weak_inverse_failures;
    verdict(5, t4 == 256 && bad == 0 && counterexample && failures == 0,
            std::to_string(t4) + " maps of degree 4 and " + std::to_string(elements)
                + " enumerated elements, " + std::to_string(bad + failures)
                + " failures; [1,1,2]: s s s != s and s^3 s s^3 == s^3 "
                + (counterexample ? "hold" : "do not hold"));
  }

  {
    auto const instances = ex.nilpotent_instances + rnd.nilpotent_instances
                           + ledger.nilpotent;
    auto const failures = ex.degree_bound_failures + rnd.degree_bound_failures
                          + ledger.bound_failures;
    verdict(6, failures == 0 && instances > 0,
            std::to_string(instances) + " nilpotent instances, "
                + std::to_string(failures) + " bound violations");
  }

  criterion_7(absorb);

  {
    auto const witnesses = ex.replays + rnd.replays + ex.replay_failures
                           + rnd.replay_failures + ex.replay_unverified
                           + rnd.replay_unverified + ledger.witnesses;
    auto const failures = ex.replay_failures + rnd.replay_failures
                          + ledger.replay_failures;
    auto const unverified = ex.replay_unverified + rnd.replay_unverified
                            + ledger.unverified;
    std::ostringstream out;
    out << witnesses << " witnesses, " << failures << " failed, " << unverified
        << " not checkable";
    for (auto const& n : ledger.notes) {
      out << "\n    " << n;
    }
    verdict(8, failures == 0 && unverified == 0 && witnesses > 0, out.str());
  }

  criterion_9(exe);

  return unexplained_failure ? 1 : 0;
}
