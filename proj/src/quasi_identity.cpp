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

#include "tsprops/quasi_identity.hpp"

#include <algorithm>  // for max
#include <cctype>     // for isspace, isdigit
#include <sstream>    // for ostringstream

#include "tsprops/core.hpp"  // for ParseError, PreconditionError

namespace tsprops {

  void QuasiIdentity::validate() const {
    if (variables == 0) {
      throw PreconditionError("a quasi-identity needs at least one variable");
    }
    if (idempotent.size() != variables) {
      throw PreconditionError("expected one idempotency flag per variable");
    }
    if (lhs.empty() || rhs.empty()) {
      throw PreconditionError("both sides of a quasi-identity must be nonempty");
    }
    for (auto const* side : {&lhs, &rhs}) {
      for (auto x : *side) {
        if (x >= variables) {
          throw PreconditionError("variable x" + std::to_string(x + 1)
                                  + " out of range");
        }
      }
    }
  }

  QuasiIdentity make_quasi_identity(std::size_t              variables,
                                    std::vector<std::size_t> idempotent_vars,
                                    std::vector<std::size_t> lhs,
                                    std::vector<std::size_t> rhs) {
    QuasiIdentity qid;
    qid.variables = variables;
    qid.idempotent.assign(variables, false);
    for (auto x : idempotent_vars) {
      if (x == 0 || x > variables) {
        throw PreconditionError("idempotent variable out of range");
      }
      qid.idempotent[x - 1] = true;
    }
    for (auto x : lhs) {
      qid.lhs.push_back(x - 1);
    }
    for (auto x : rhs) {
      qid.rhs.push_back(x - 1);
    }
    qid.validate();
    return qid;
  }

  std::vector<std::string> const& preset_names() {
    static std::vector<std::string> const names = {"band",
                                                   "central_idempotents",
                                                   "commuting_idempotents",
                                                   "orthodox",
                                                   "square_absorbs",
                                                   "idempotent_left_identity",
                                                   "idempotent_right_identity"};
    return names;
  }

  QuasiIdentity preset(std::string_view name) {
    if (name == "band") {
      return make_quasi_identity(1, {}, {1, 1}, {1});
    } else if (name == "central_idempotents") {
      return make_quasi_identity(2, {1}, {1, 2}, {2, 1});
    } else if (name == "commuting_idempotents") {
      return make_quasi_identity(2, {1, 2}, {1, 2}, {2, 1});
    } else if (name == "orthodox") {
      return make_quasi_identity(2, {1, 2}, {1, 2, 1, 2}, {1, 2});
    } else if (name == "square_absorbs") {
      return make_quasi_identity(2, {}, {1, 1, 2}, {1, 1});
    } else if (name == "idempotent_left_identity") {
      return make_quasi_identity(2, {1}, {1, 2}, {2});
    } else if (name == "idempotent_right_identity") {
      return make_quasi_identity(2, {1}, {2, 1}, {2});
    }
    throw PreconditionError("unknown quasi-identity preset '"
                            + std::string(name) + "'");
  }

  namespace {

    class QidParser {
     public:
      explicit QidParser(std::string_view text) : _text(text) {}

      QuasiIdentity parse() {
        std::vector<std::size_t> idem;
        skip_space();
        if (_text.substr(_pos, 4) == "idem") {
          _pos += 4;
          expect('(');
          idem.push_back(variable());
          skip_space();
          while (peek() == ',') {
            ++_pos;
            idem.push_back(variable());
            skip_space();
          }
          expect(')');
          expect('=');
          if (peek() != '>') {
            fail("expected '=>' after idem(...)");
          }
          ++_pos;
        }
        auto lhs = side();
        expect('=');
        auto rhs = side();
        skip_space();
        if (_pos != _text.size()) {
          fail(std::string("unexpected character '") + _text[_pos] + "'");
        }
        std::size_t m = 0;
        for (auto const* v : {&idem, &lhs, &rhs}) {
          for (auto x : *v) {
            m = std::max(m, x);
          }
        }
        return make_quasi_identity(m, idem, lhs, rhs);
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(0,
                         "quasi-identity, column " + std::to_string(_pos + 1)
                             + ": " + what);
      }

      char peek() const {
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      void expect(char c) {
        skip_space();
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      std::size_t variable() {
        skip_space();
        if (peek() != 'x') {
          fail("expected a variable x1..x9");
        }
        ++_pos;
        char const d = peek();
        if (d < '1' || d > '9') {
          fail("expected a variable x1..x9");
        }
        ++_pos;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("variables are x1..x9");
        }
        return static_cast<std::size_t>(d - '0');
      }

      std::vector<std::size_t> side() {
        std::vector<std::size_t> word;
        skip_space();
        while (peek() == 'x') {
          word.push_back(variable());
          skip_space();
        }
        if (word.empty()) {
          fail("expected a nonempty word");
        }
        return word;
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

  }  // namespace

  QuasiIdentity parse_quasi_identity(std::string_view text) {
    return QidParser(text).parse();
  }

  std::string to_string(QuasiIdentity const& qid) {
    std::ostringstream out;
    bool               first = true;
    for (std::size_t x = 0; x < qid.variables; ++x) {
      if (qid.idempotent[x]) {
        out << (first ? "idem(" : ",") << 'x' << x + 1;
        first = false;
      }
    }
    if (!first) {
      out << ") => ";
    }
    auto side = [&out](std::vector<std::size_t> const& w) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        out << (i == 0 ? "" : " ") << 'x' << w[i] + 1;
      }
    };
    side(qid.lhs);
    out << " = ";
    side(qid.rhs);
    return out.str();
  }

}  // namespace tsprops
