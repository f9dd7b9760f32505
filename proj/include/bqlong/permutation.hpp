#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bqlong/errors.hpp"

namespace bqlong {

using Point = std::uint32_t;

/// A bijection of {0, ..., k-1} in one-line notation.
///
/// Products compose left to right: `(p * q)(x) == q(p(x))`, i.e. `p` acts
/// first. This is the convention of right actions (as in GAP), and the one
/// under which cycle-notation results for Wada biquandles on symmetric groups
/// come out as published.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point y : images_) {
      if (y >= images_.size() || seen[y]) {
        throw ArgumentError("permutation images are not a bijection");
      }
      seen[y] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<const Point> images() const noexcept { return images_; }

  Point operator()(Point x) const { return images_.at(x); }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      r.images_[images_[i]] = static_cast<Point>(i);
    }
    return r;
  }

  /// Apply `*this`, then `q`.
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw ArgumentError("permutation degree mismatch");
    Permutation r;
    r.images_.resize(p.degree());
    for (std::size_t x = 0; x < p.degree(); ++x) r.images_[x] = q.images_[p.images_[x]];
    return r;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Disjoint-cycle notation with 1-based points, each cycle starting at its
/// smallest point, cycles ordered by that point; the identity is `()`.
/// Example: the images {2,0,1,4,3} (0-based) print as `(1,3,2)(4,5)`.
inline std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    out += '(';
    Point x = start;
    bool first = true;
    do {
      if (!first) out += ',';
      first = false;
      out += std::to_string(x + 1);
      seen[x] = true;
      x = p(x);
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Parse cycle notation such as `(1,2,3)(4,5)`, `( 1 2 )` or `()` into a
/// permutation of the given degree. Points are 1-based.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::vector<bool> used(degree, false);

  auto fail = [&](const std::string& why) -> ArgumentError {
    return ArgumentError("bad cycle notation '" + std::string(text) + "': " + why);
  };

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw fail("empty");
  while (i < text.size()) {
    if (text[i] != '(') throw fail("expected '('");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw fail("expected a point");
      }
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree) throw fail("point out of range");
        ++i;
      }
      if (value == 0) throw fail("points are 1-based");
      Point point = static_cast<Point>(value - 1);
      if (used[point]) throw fail("point " + std::to_string(value) + " repeated");
      used[point] = true;
      cycle.push_back(point);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(images));
}

}  // namespace bqlong
