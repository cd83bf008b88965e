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

#include "tsprops/core.hpp"

#include <algorithm>      // for sort, unique, all_of
#include <numeric>        // for iota
#include <sstream>        // for ostringstream
#include <unordered_map>  // for unordered_map
#include <utility>        // for move

namespace tsprops {

  Transformation::Transformation(std::vector<Point> images)
      : _images(std::move(images)) {
    if (_images.empty()) {
      throw PreconditionError("a transformation must have degree >= 1");
    }
    auto const n = _images.size();
    for (std::size_t q = 0; q < n; ++q) {
      if (_images[q] >= n) {
        throw PreconditionError("image of point " + std::to_string(q + 1)
                                + " is " + std::to_string(_images[q] + 1)
                                + ", outside 1.." + std::to_string(n));
      }
    }
  }

  Transformation Transformation::identity(std::size_t n) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point(0));
    return Transformation(std::move(images));
  }

  Transformation Transformation::constant(std::size_t n, Point value) {
    return Transformation(std::vector<Point>(n, value));
  }

  Transformation
  Transformation::from_one_based(std::span<const long long> images) {
    std::vector<Point> result;
    result.reserve(images.size());
    auto const n = static_cast<long long>(images.size());
    for (std::size_t q = 0; q < images.size(); ++q) {
      if (images[q] < 1 || images[q] > n) {
        throw PreconditionError("image of point " + std::to_string(q + 1)
                                + " is " + std::to_string(images[q])
                                + ", outside 1.." + std::to_string(n));
      }
      result.push_back(static_cast<Point>(images[q] - 1));
    }
    return Transformation(std::move(result));
  }

  std::vector<long long> Transformation::one_based() const {
    std::vector<long long> result;
    result.reserve(_images.size());
    for (auto x : _images) {
      result.push_back(static_cast<long long>(x) + 1);
    }
    return result;
  }

  std::size_t
  TransformationHash::operator()(Transformation const& t) const noexcept {
    std::size_t seed = t.degree();
    for (auto x : t.images()) {
      seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }

  Transformation compose(Transformation const& s, Transformation const& t) {
    if (s.degree() != t.degree()) {
      throw PreconditionError("cannot compose transformations of degree "
                              + std::to_string(s.degree()) + " and "
                              + std::to_string(t.degree()));
    }
    std::vector<Point> images(s.degree());
    for (Point q = 0; q < images.size(); ++q) {
      images[q] = t[s[q]];
    }
    return Transformation(std::move(images));
  }

  Transformation power(Transformation const& s, std::size_t m) {
    if (m == 0) {
      throw PreconditionError("power exponent must be >= 1");
    }
    Transformation result = s;
    Transformation base   = s;
    --m;
    while (m > 0) {
      if (m & 1) {
        result = result * base;
      }
      base = base * base;
      m >>= 1;
    }
    return result;
  }

  PointSet image(Transformation const& s) {
    PointSet result(s.images().begin(), s.images().end());
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  std::size_t rank(Transformation const& s) {
    return image(s).size();
  }

  bool is_idempotent(Transformation const& s) {
    for (Point q = 0; q < s.degree(); ++q) {
      if (s[s[q]] != s[q]) {
        return false;
      }
    }
    return true;
  }

  bool is_permutation(Transformation const& s) {
    return rank(s) == s.degree();
  }

  bool is_permutation_on_image(Transformation const& s) {
    // s permutes its image iff s^2 has the same rank as s.
    return rank(s * s) == rank(s);
  }

  PowerCycle power_cycle(Transformation const& s) {
    std::unordered_map<Transformation, std::size_t> seen;
    Transformation                                  x = s;
    for (std::size_t m = 1;; ++m) {
      auto [it, inserted] = seen.emplace(x, m);
      if (!inserted) {
        return PowerCycle{it->second, m - it->second};
      }
      x = x * s;
    }
  }

  std::size_t idempotent_power_exponent(Transformation const& s) {
    auto [index, period] = power_cycle(s);
    return ((index + period - 1) / period) * period;
  }

  Transformation idempotent_power(Transformation const& s) {
    return power(s, idempotent_power_exponent(s));
  }

  std::string to_string(Transformation const& s) {
    std::ostringstream out;
    out << '[';
    for (Point q = 0; q < s.degree(); ++q) {
      out << (q == 0 ? "" : " ") << s[q] + 1;
    }
    out << ']';
    return out.str();
  }

  std::string to_string(Word const& w) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < w.size(); ++i) {
      out << (i == 0 ? "" : " ") << w[i] + 1;
    }
    out << ']';
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<std::size_t> labels)
      : _class_of(labels.size()) {
    std::unordered_map<std::size_t, std::size_t> renumber;
    for (std::size_t q = 0; q < labels.size(); ++q) {
      auto [it, inserted] = renumber.emplace(labels[q], _classes.size());
      if (inserted) {
        _classes.emplace_back();
      }
      _class_of[q] = it->second;
      _classes[it->second].push_back(static_cast<Point>(q));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // GeneratorSet
  ////////////////////////////////////////////////////////////////////////

  GeneratorSet::GeneratorSet(std::vector<Transformation> generators,
                             std::vector<std::string>    names)
      : _generators(std::move(generators)), _names(std::move(names)) {
    if (_generators.empty()) {
      throw PreconditionError("a generator set must be nonempty");
    }
    auto const n = _generators.front().degree();
    for (std::size_t i = 0; i < _generators.size(); ++i) {
      if (_generators[i].degree() != n || n == 0) {
        throw PreconditionError("generator " + std::to_string(i + 1)
                                + " has degree "
                                + std::to_string(_generators[i].degree())
                                + ", expected " + std::to_string(n));
      }
    }
    if (!_names.empty() && _names.size() != _generators.size()) {
      throw PreconditionError("expected one name per generator");
    }
  }

  std::string GeneratorSet::name(std::size_t i) const {
    if (!_names.empty() && !_names[i].empty()) {
      return _names[i];
    }
    return "a" + std::to_string(i + 1);
  }

  Transformation GeneratorSet::evaluate(Word const& w) const {
    if (w.empty()) {
      throw PreconditionError("cannot evaluate the empty word in S");
    }
    std::vector<Point> images(degree());
    for (Point q = 0; q < images.size(); ++q) {
      images[q] = act(q, w);
    }
    return Transformation(std::move(images));
  }

  Point GeneratorSet::act(Point q, Word const& w) const {
    for (auto i : w) {
      q = _generators.at(i)[q];
    }
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernels and induced actions
  ////////////////////////////////////////////////////////////////////////

  Partition kernel(std::span<const Transformation> maps) {
    if (maps.empty()) {
      throw PreconditionError("kernel of an empty list is undefined");
    }
    auto const n = maps.front().degree();
    for (auto const& a : maps) {
      if (a.degree() != n) {
        throw PreconditionError("kernel: generators of mixed degree");
      }
    }
    // Two points share a class iff their image vectors coincide.
    std::vector<std::vector<Point>> signature(n);
    for (Point q = 0; q < n; ++q) {
      for (auto const& a : maps) {
        signature[q].push_back(a[q]);
      }
    }
    std::vector<std::size_t> labels(n);
    for (Point q = 0; q < n; ++q) {
      labels[q] = q;
      for (Point p = 0; p < q; ++p) {
        if (signature[p] == signature[q]) {
          labels[q] = labels[p];
          break;
        }
      }
    }
    return Partition(std::move(labels));
  }

  Partition kernel(GeneratorSet const& gens) {
    return kernel(gens.generators());
  }

  QuotientAction quotient_action(GeneratorSet const& gens) {
    Partition classes = kernel(gens);
    std::vector<Transformation> action;
    for (auto const& a : gens.generators()) {
      std::vector<Point> images(classes.number_of_classes());
      for (std::size_t c = 0; c < classes.number_of_classes(); ++c) {
        auto const& block = classes.classes()[c];
        auto const  value = classes.class_of(a[block.front()]);
        for (auto q : block) {
          if (classes.class_of(a[q]) != value) {
            throw Error("internal error: quotient action is not well defined");
          }
        }
        images[c] = static_cast<Point>(value);
      }
      action.emplace_back(std::move(images));
    }
    return QuotientAction{std::move(classes),
                          GeneratorSet(std::move(action), gens.names())};
  }

  ImageAction image_action(GeneratorSet const& gens) {
    PointSet domain;
    for (auto const& a : gens.generators()) {
      auto im = image(a);
      domain.insert(domain.end(), im.begin(), im.end());
    }
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());

    std::vector<Point> position(gens.degree(), 0);
    for (std::size_t i = 0; i < domain.size(); ++i) {
      position[domain[i]] = static_cast<Point>(i);
    }
    std::vector<Transformation> action;
    for (auto const& a : gens.generators()) {
      std::vector<Point> images(domain.size());
      for (std::size_t i = 0; i < domain.size(); ++i) {
        auto const target = a[domain[i]];
        if (!contains(domain, target)) {
          throw Error("internal error: image of S is not closed");
        }
        images[i] = position[target];
      }
      action.emplace_back(std::move(images));
    }
    return ImageAction{std::move(domain),
                       GeneratorSet(std::move(action), gens.names())};
  }

  PointSet fixed_points(GeneratorSet const& gens) {
    PointSet result;
    for (Point q = 0; q < gens.degree(); ++q) {
      if (std::all_of(gens.generators().begin(),
                      gens.generators().end(),
                      [q](auto const& a) { return a[q] == q; })) {
        result.push_back(q);
      }
    }
    return result;
  }

  bool contains(PointSet const& set, Point q) {
    return std::binary_search(set.begin(), set.end(), q);
  }

}  // namespace tsprops
