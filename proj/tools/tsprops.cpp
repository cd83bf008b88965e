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

// tsprops: decide properties of transformation semigroups from the command
// line.
//
// Exit codes: 0 TRUE (or success), 1 FALSE, 2 malformed or invalid input,
// 3 unknown property, 4 UNDECIDED, 5 the engines disagree.

#include <chrono>    // for steady_clock
#include <cstdlib>   // for getenv, strtoull
#include <fstream>   // for ofstream
#include <iostream>  // for cout, cerr
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include <CLI11.hpp>
#include <json.hpp>

#include "tsprops/crosscheck.hpp"
#include "tsprops/identity_engine.hpp"
#include "tsprops/io.hpp"
#include "tsprops/properties.hpp"
#include "tsprops/pspace_search.hpp"
#include "tsprops/reductions.hpp"
#include "tsprops/report_json.hpp"

namespace {

  using namespace tsprops;
  using nlohmann::json;

  enum Exit : int {
    kTrue        = 0,
    kFalse       = 1,
    kInputError  = 2,
    kUnknown     = 3,
    kUndecided   = 4,
    kDisagree    = 5,
  };

  int exit_code(Verdict v) {
    switch (v) {
      case Verdict::True:
        return kTrue;
      case Verdict::False:
        return kFalse;
      case Verdict::Undecided:
        break;
    }
    return kUndecided;
  }

  std::size_t default_cap() {
    if (char const* env = std::getenv("TSPROPS_CAP")) {
      char* end = nullptr;
      auto  v   = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return static_cast<std::size_t>(v);
      }
    }
    return kDefaultElementCap;
  }

  std::string render_word(Word const& w, GeneratorSet const& gens) {
    std::string out;
    for (auto g : w) {
      out += (out.empty() ? "" : " ") + gens.name(g);
    }
    return out.empty() ? "(empty)" : out;
  }

  void print(PropertyReport const& r, GeneratorSet const& gens) {
    std::cout << "property: " << r.property << '\n'
              << "verdict:  " << to_string(r.verdict) << '\n'
              << "engine:   " << to_string(r.engine) << '\n';
    if (!r.message.empty()) {
      std::cout << "message:  " << r.message << '\n';
    }
    if (!r.witness) {
      return;
    }
    auto const& w = *r.witness;
    std::cout << "witness:  " << w.kind << '\n';
    if (!w.points.empty()) {
      std::cout << "  points:";
      for (auto q : w.points) {
        std::cout << ' ' << q + 1;
      }
      std::cout << '\n';
    }
    if (!w.indices.empty()) {
      std::cout << "  generators:";
      for (auto i : w.indices) {
        std::cout << ' ' << gens.name(i);
      }
      std::cout << '\n';
    }
    for (std::size_t i = 0; i < w.words.size(); ++i) {
      std::cout << "  word " << i + 1 << ": " << render_word(w.words[i], gens)
                << '\n';
    }
    for (std::size_t i = 0; i < w.elements.size(); ++i) {
      std::cout << "  element " << i + 1 << ": " << to_string(w.elements[i])
                << '\n';
    }
    if (w.bound != 0) {
      std::cout << "  bound: " << w.bound << '\n';
    }
    if (!w.note.empty()) {
      std::cout << "  note: " << w.note << '\n';
    }
  }

  json instance_json(GeneratorSet const& gens) {
    return {{"degree", gens.degree()},
            {"generators", gens.size()},
            {"digest", digest(gens)}};
  }

  double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }

  // Prints one report and returns its exit code.
  int emit(PropertyReport const&                 r,
           GeneratorSet const&                   gens,
           bool                                  as_json,
           std::chrono::steady_clock::time_point start) {
    if (as_json) {
      auto j          = to_json(r);
      j["instance"]   = instance_json(gens);
      j["elapsed_ms"] = elapsed_ms(start);
      std::cout << j.dump(2) << '\n';
    } else {
      print(r, gens);
    }
    return exit_code(r.verdict);
  }

  struct CheckArgs {
    std::string file, property, engine = "structural";
    std::size_t cap     = 0;
    bool        as_json = false;
  };

  int cmd_check(CheckArgs const& a) {
    auto const start = std::chrono::steady_clock::now();
    auto const gens  = parse_generators(read_file(a.file));
    if (!is_property(a.property)) {
      throw UnknownProperty("unknown property '" + a.property + "'");
    }
    CheckLimits limits;
    limits.element_cap = a.cap;
    if (a.engine == "structural") {
      return emit(structural_check(gens, a.property, limits), gens, a.as_json, start);
    } else if (a.engine == "oracle") {
      return emit(oracle_check(gens, a.property, a.cap), gens, a.as_json, start);
    }
    auto const  s = structural_check(gens, a.property, limits);
    auto const  o = oracle_check(gens, a.property, a.cap);
    std::string why;
    bool const  decided = s.verdict != Verdict::Undecided
                         && o.verdict != Verdict::Undecided;
    bool const agree = !decided || reports_agree(s, o, &why);
    if (a.as_json) {
      json j = {{"structural", to_json(s)},
                {"oracle", to_json(o)},
                {"agree", agree},
                {"instance", instance_json(gens)},
                {"elapsed_ms", elapsed_ms(start)}};
      if (!why.empty()) {
        j["disagreement"] = why;
      }
      std::cout << j.dump(2) << '\n';
    } else {
      print(s, gens);
      std::cout << '\n';
      print(o, gens);
      std::cout << '\n' << (agree ? "engines agree" : "ENGINES DISAGREE: " + why) << '\n';
    }
    if (!agree) {
      return kDisagree;
    }
    return decided ? exit_code(s.verdict) : kUndecided;
  }

  struct IdentityArgs {
    std::string file, quasi, preset;
    bool        as_json = false;
  };

  int cmd_identity(IdentityArgs const& a) {
    auto const start = std::chrono::steady_clock::now();
    auto const gens  = parse_generators(read_file(a.file));
    if (a.quasi.empty() == a.preset.empty()) {
      throw PreconditionError("give exactly one of --quasi and --preset");
    }
    auto const qid = a.preset.empty() ? parse_quasi_identity(a.quasi)
                                      : preset(a.preset);
    PropertyReport r;
    try {
      r = models(gens, qid, to_string(qid));
    } catch (BudgetExceeded const& e) {
      r.property = to_string(qid);
      r.verdict  = Verdict::Undecided;
      r.message  = e.what();
    }
    return emit(r, gens, a.as_json, start);
  }

  struct ElementArgs {
    std::string                file, mode, target_file;
    std::optional<std::size_t> target;
    std::size_t                cap     = 0;
    bool                       as_json = false;
  };

  int cmd_element(ElementArgs const& a) {
    auto const start = std::chrono::steady_clock::now();
    auto const gens  = parse_generators(read_file(a.file));
    auto const mode  = search_mode(a.mode);
    if (a.target.has_value() == !a.target_file.empty()) {
      throw PreconditionError("give exactly one of --target and --target-file");
    }
    Transformation s;
    if (a.target) {
      if (*a.target < 1 || *a.target > gens.size()) {
        throw PreconditionError("target generator out of range");
      }
      s = gens[*a.target - 1];
    } else {
      auto const t = parse_generators(read_file(a.target_file));
      if (t.size() != 1 || t.degree() != gens.degree()) {
        throw PreconditionError(
            "the target file must hold one map of the generators' degree");
      }
      s = t[0];
    }
    auto const r = element_search_report(gens, s, mode, a.cap);
    if (!a.as_json) {
      print(r, gens);
    } else {
      emit(r, gens, true, start);
    }
    return exit_code(r.verdict);
  }

  struct ReduceArgs {
    std::string              kind, output = "-", target_output;
    std::vector<std::string> inputs;
  };

  int cmd_reduce(ReduceArgs const& a) {
    std::vector<std::string> header = {"reduction: " + a.kind};
    GeneratorSet             gens;
    std::optional<Transformation> target;
    auto const single = [&a] {
      if (a.inputs.size() != 1) {
        throw PreconditionError("this reduction takes one input file");
      }
      return read_file(a.inputs[0]);
    };
    auto const dfas = [&a] {
      std::vector<DFA> ds;
      for (auto const& f : a.inputs) {
        ds.push_back(parse_dfa(read_file(f)));
      }
      return ds;
    };
    if (a.kind == "zero") {
      gens = dfa_emptiness_to_zero(parse_dfa(single()));
      header.push_back("guarantee: S has a zero iff the language is nonempty");
    } else if (a.kind == "nilpotent") {
      gens = dfa_emptiness_to_nilpotent(parse_dfa(single()));
      header.push_back("guarantee: S is nilpotent iff the language is empty");
    } else if (a.kind == "rtrivial") {
      gens = digraph_to_semigroup(parse_digraph(single()));
      header.push_back("guarantee: S is nilpotent iff the digraph is acyclic");
    } else if (a.kind == "regular") {
      auto inst = dfa_intersection_to_regular(dfas());
      gens      = std::move(inst.gens);
      header.push_back("target: generator " + std::to_string(inst.target + 1)
                       + " (" + gens.name(inst.target) + ")");
      header.push_back("guarantee: the target is regular in S iff some word "
                       "is accepted by every DFA");
      target = gens[inst.target];
    } else if (a.kind == "weak-inverse") {
      auto inst = dfa_intersection_to_weak_inverse(dfas());
      gens      = std::move(inst.gens);
      std::string images;
      for (auto x : inst.target.one_based()) {
        images += " " + std::to_string(x);
      }
      header.push_back("target:" + images);
      header.push_back("guarantee: the target has a weak inverse in S iff "
                       "some word is accepted by every DFA");
      target = std::move(inst.target);
    } else {
      throw PreconditionError("unknown reduction '" + a.kind + "'");
    }
    auto const write = [](std::string const& path, std::string const& text) {
      if (path == "-") {
        std::cout << text;
        return;
      }
      std::ofstream out(path);
      if (!out || !(out << text)) {
        throw Error("cannot write '" + path + "'");
      }
    };
    write(a.output, render_generators(gens, header));
    if (!a.target_output.empty()) {
      if (!target) {
        throw PreconditionError("this reduction has no target");
      }
      write(a.target_output,
            render_generators(GeneratorSet({*target}), {"target of " + a.kind}));
    }
    return kTrue;
  }

  struct CrosscheckArgs {
    CrosscheckOptions options;
    bool              as_json = false;
  };

  int cmd_crosscheck(CrosscheckArgs const& a) {
    auto const s = crosscheck(a.options);
    if (a.as_json) {
      std::cout << to_json(s).dump(2) << '\n';
    } else {
      std::cout << "instances: " << s.instances << " (skipped " << s.skipped
                << ")\nchecks: " << s.checks
                << "\ndisagreements: " << s.disagreements
                << "\nreplayed witnesses: " << s.replays
                << "\nreplay failures: " << s.replay_failures
                << "\nunverified witnesses: " << s.replay_unverified
                << "\nweak inverse failures: " << s.weak_inverse_failures
                << "\ndegree bound failures: " << s.degree_bound_failures
                << '\n';
      for (auto const& f : s.failures) {
        std::cout << "FAIL " << f.property << ": " << f.reason << '\n'
                  << f.instance;
      }
    }
    return s.passed() ? kTrue : kDisagree;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide properties of finite transformation semigroups"};
  app.require_subcommand(1);
  auto const cap = default_cap();

  CheckArgs check;
  check.cap = cap;
  auto* c   = app.add_subcommand("check", "decide a property");
  c->add_option("file", check.file, "generator file")->required();
  c->add_option("-p,--property", check.property, "property name")->required();
  c->add_option("-e,--engine", check.engine, "structural, oracle or both")
      ->check(CLI::IsMember({"structural", "oracle", "both"}));
  c->add_option("--cap", check.cap, "element cap (default $TSPROPS_CAP)");
  c->add_flag("--json", check.as_json, "print JSON");

  IdentityArgs identity;
  auto*        i = app.add_subcommand("identity", "check a quasi-identity");
  i->add_option("file", identity.file, "generator file")->required();
  i->add_option("-q,--quasi", identity.quasi, "e.g. \"idem(x1) => x1 x2 = x2 x1\"");
  i->add_option("--preset", identity.preset, "named quasi-identity");
  i->add_flag("--json", identity.as_json, "print JSON");

  ElementArgs element;
  element.cap = cap;
  auto* e     = app.add_subcommand("element", "search S for a partner element");
  e->add_option("file", element.file, "generator file")->required();
  e->add_option("-m,--mode", element.mode, "regularizer, weak-inverse or inverse")
      ->required()
      ->check(CLI::IsMember({"regularizer", "weak-inverse", "inverse"}));
  e->add_option("-t,--target", element.target, "1-based generator index");
  e->add_option("--target-file", element.target_file, "file with one map");
  e->add_option("--cap", element.cap, "element cap (default $TSPROPS_CAP)");
  e->add_flag("--json", element.as_json, "print JSON");

  ReduceArgs reduce;
  auto*      r = app.add_subcommand("reduce", "build a reduction instance");
  r->add_option("kind", reduce.kind, "zero, nilpotent, rtrivial, regular, weak-inverse")
      ->required();
  r->add_option("inputs", reduce.inputs, "DFA or digraph files")->required();
  r->add_option("-o,--output", reduce.output, "output file, - for stdout");
  r->add_option("--target-output", reduce.target_output, "write the target map here");

  CrosscheckArgs cross;
  auto*          x = app.add_subcommand("crosscheck", "compare engines");
  x->add_option("--n", cross.options.max_degree, "(maximal) degree");
  x->add_option("--k", cross.options.max_generators, "maximal generator count");
  x->add_option("--samples", cross.options.samples, "random instances");
  x->add_option("--seed", cross.options.seed, "random seed");
  x->add_option("--cap", cross.options.oracle_cap, "oracle element cap");
  x->add_option("--property", cross.options.properties, "restrict to these");
  x->add_flag("--exhaustive", cross.options.exhaustive, "all generator lists");
  x->add_flag("--json", cross.as_json, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& err) {
    int const code = app.exit(err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (c->parsed()) {
      return cmd_check(check);
    } else if (i->parsed()) {
      return cmd_identity(identity);
    } else if (e->parsed()) {
      return cmd_element(element);
    } else if (r->parsed()) {
      return cmd_reduce(reduce);
    }
    for (auto const& p : cross.options.properties) {
      if (!is_property(p) || is_oracle_only(p)) {
        throw UnknownProperty("no structural checker for '" + p + "'");
      }
    }
    return cmd_crosscheck(cross);
  } catch (UnknownProperty const& err) {
    std::cerr << "tsprops: " << err.what() << '\n';
    return kUnknown;
  } catch (Error const& err) {
    std::cerr << "tsprops: " << err.what() << '\n';
    return kInputError;
  }
}
