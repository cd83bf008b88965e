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

// Transformations on [n], generator sets, kernels, images and the induced
// actions on kernel classes and on the image of a semigroup.
//
// Points are 0-based internally; every external format is 1-based.  The
// semigroup acts on the right: q * (st) == (q * s) * t.

#ifndef TSPROPS_CORE_HPP_
#define TSPROPS_CORE_HPP_

#include <compare>     // for strong_ordering
#include <cstddef>     // for size_t
#include <cstdint>     // for uint32_t
#include <functional>  // for hash
#include <span>        // for span
#include <stdexcept>   // for runtime_error
#include <string>      // for string
#include <vector>      // for vector

namespace tsprops {

  using Point = std::uint32_t;
  using PointSet = std::vector<Point>;  // sorted, no duplicates

  // Sequence of generator indices (0-based); a product read left to right.
  using Word = std::vector<std::size_t>;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised when an input violates a documented precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Raised when a search or enumeration exceeds its configured budget.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  // Malformed textual input; line is 1-based, 0 when not applicable.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error(line == 0 ? what
                          : "line " + std::to_string(line) + ": " + what),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  class Transformation {
   public:
    Transformation() = default;

    // Throws PreconditionError if the map is empty or leaves [0, n).
    explicit Transformation(std::vector<Point> images);

    static Transformation identity(std::size_t n);
    static Transformation constant(std::size_t n, Point value);
    static Transformation from_one_based(std::span<const long long> images);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    Point operator[](Point q) const noexcept {
      return _images[q];
    }

    std::span<const Point> images() const noexcept {
      return _images;
    }

    std::vector<long long> one_based() const;

    friend bool operator==(Transformation const&, Transformation const&)
        = default;
    friend std::strong_ordering operator<=>(Transformation const&,
                                            Transformation const&)
        = default;

   private:
    std::vector<Point> _images;
  };

  struct TransformationHash {
    std::size_t operator()(Transformation const& t) const noexcept;
  };

  // q * result == (q * s) * t.  Throws PreconditionError on degree mismatch.
  Transformation compose(Transformation const& s, Transformation const& t);

  inline Transformation operator*(Transformation const& s,
                                  Transformation const& t) {
    return compose(s, t);
  }

  // s^m for m >= 1.
  Transformation power(Transformation const& s, std::size_t m);

  PointSet image(Transformation const& s);
  std::size_t rank(Transformation const& s);
  bool is_idempotent(Transformation const& s);
  bool is_permutation(Transformation const& s);

  // True iff s restricted to its image is a bijection of that image.
  bool is_permutation_on_image(Transformation const& s);

  // Index and period of the monogenic semigroup generated by s:
  // s^(index + period) == s^index with both minimal.
  struct PowerCycle {
    std::size_t index;
    std::size_t period;
  };
  PowerCycle power_cycle(Transformation const& s);

  // Smallest m >= 1 with s^m idempotent.
  std::size_t idempotent_power_exponent(Transformation const& s);

  // Idempotent power s^omega with the minimal exponent.
  Transformation idempotent_power(Transformation const& s);

  std::string to_string(Transformation const& s);  // "[2 3 1]"
  std::string to_string(Word const& w);            // "[1 1]" (1-based)

  class Partition {
   public:
    Partition() = default;
    // Any labelling; ids are renumbered in order of first occurrence.
    explicit Partition(std::vector<std::size_t> labels);

    std::size_t degree() const noexcept {
      return _class_of.size();
    }
    std::size_t number_of_classes() const noexcept {
      return _classes.size();
    }
    std::size_t class_of(Point q) const noexcept {
      return _class_of[q];
    }
    std::vector<PointSet> const& classes() const noexcept {
      return _classes;
    }
    bool same_class(Point p, Point q) const noexcept {
      return _class_of[p] == _class_of[q];
    }

    friend bool operator==(Partition const&, Partition const&) = default;

   private:
    std::vector<std::size_t> _class_of;
    std::vector<PointSet>    _classes;
  };

  class GeneratorSet {
   public:
    GeneratorSet() = default;
    // Throws PreconditionError if empty, of mixed degree, or if the number
    // of names is neither zero nor the number of generators.
    explicit GeneratorSet(std::vector<Transformation> generators,
                          std::vector<std::string>    names = {});

    std::size_t degree() const noexcept {
      return _generators.front().degree();
    }
    std::size_t size() const noexcept {
      return _generators.size();
    }
    Transformation const& operator[](std::size_t i) const noexcept {
      return _generators[i];
    }
    std::vector<Transformation> const& generators() const noexcept {
      return _generators;
    }
    bool has_names() const noexcept {
      return !_names.empty();
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    // The given name, or "a<i+1>" when unnamed.
    std::string name(std::size_t i) const;

    // Product of the generators along a nonempty word.
    Transformation evaluate(Word const& w) const;

    // q * w, for possibly empty w.
    Point act(Point q, Word const& w) const;

    friend bool operator==(GeneratorSet const&, GeneratorSet const&)
        = default;

   private:
    std::vector<Transformation> _generators;
    std::vector<std::string>    _names;
  };

  // Finest partition with p ~ q iff p * a == q * a for every listed a.
  Partition kernel(std::span<const Transformation> maps);
  Partition kernel(GeneratorSet const& gens);

  // Action of S on [n]/ker(S): class(q) * bar(s) == class(q * s).
  struct QuotientAction {
    Partition    classes;
    GeneratorSet action;  // degree == classes.number_of_classes()
  };
  QuotientAction quotient_action(GeneratorSet const& gens);

  // Restriction of S to [n]S, the union of the generator images.  Point i of
  // the action corresponds to domain[i].
  struct ImageAction {
    PointSet     domain;
    GeneratorSet action;
  };
  ImageAction image_action(GeneratorSet const& gens);

  // Points fixed by every generator (equivalently by every element of S).
  PointSet fixed_points(GeneratorSet const& gens);

  bool contains(PointSet const& set, Point q);

}  // namespace tsprops

template <>
struct std::hash<tsprops::Transformation> {
  std::size_t operator()(tsprops::Transformation const& t) const noexcept {
    return tsprops::TransformationHash()(t);
  }
};

#endif  // TSPROPS_CORE_HPP_
