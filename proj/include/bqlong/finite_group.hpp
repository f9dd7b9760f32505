#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bqlong/errors.hpp"
#include "bqlong/permutation.hpp"

namespace bqlong {

/// Elements of every finite structure in the library are 0-based indices.
using Element = std::uint32_t;

/// A finite group stored as a Cayley table on {0, ..., order-1}.
class FiniteGroup {
 public:
  /// Builds a group from a row-major multiplication table, `mul[a*n+b] = a*b`.
  /// Associativity, the identity and inverses are checked exhaustively.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> mul,
                                std::vector<std::string> names = {}) {
    FiniteGroup g(order, std::move(mul), std::move(names));
    g.check_associative();
    return g;
  }

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }

  Element power(Element a, int k) const {
    Element base = k < 0 ? inv(a) : a;
    Element r = identity_;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) r = mul(r, base);
    return r;
  }

  const std::string& name(Element a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Non-empty when the group was built as a group of permutations; element i
  /// is `permutations()[i]`.
  const std::vector<Permutation>& permutations() const noexcept { return perms_; }
  bool is_permutation_group() const noexcept { return !perms_.empty(); }

  /// Resolves a display name. Permutation groups accept any cycle notation
  /// for the element; other groups match the stored name exactly.
  std::optional<Element> find(std::string_view text) const {
    if (is_permutation_group()) {
      Permutation p;
      try {
        p = parse_cycles(text, perms_.front().degree());
      } catch (const ArgumentError&) {
        return std::nullopt;
      }
      return index_of(p);
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == text) return static_cast<Element>(i);
    }
    return std::nullopt;
  }

  std::optional<Element> index_of(const Permutation& p) const {
    if (!is_permutation_group() || p.degree() != perms_.front().degree()) return std::nullopt;
    auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
    if (it == perms_.end() || *it != p) return std::nullopt;
    return static_cast<Element>(it - perms_.begin());
  }

  friend FiniteGroup symmetric_group(unsigned k);
  friend FiniteGroup cyclic_group(std::size_t n);

 private:
  FiniteGroup(std::size_t order, std::vector<Element> mul, std::vector<std::string> names)
      : order_(order), mul_(std::move(mul)), names_(std::move(names)) {
    if (order_ == 0) throw ArgumentError("group order must be positive");
    if (mul_.size() != order_ * order_) throw ArgumentError("multiplication table has wrong size");
    for (Element e : mul_) {
      if (e >= order_) throw ArgumentError("multiplication table entry out of range");
    }
    if (names_.empty()) {
      for (std::size_t i = 0; i < order_; ++i) names_.push_back(std::to_string(i));
    } else if (names_.size() != order_) {
      throw ArgumentError("expected one name per element");
    }
    find_identity();
    find_inverses();
  }

  void find_identity() {
    for (Element e = 0; e < order_; ++e) {
      bool ok = true;
      for (Element x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) {
        identity_ = e;
        return;
      }
    }
    throw ArgumentError("table has no two-sided identity");
  }

  void find_inverses() {
    inv_.assign(order_, 0);
    for (Element a = 0; a < order_; ++a) {
      bool found = false;
      for (Element b = 0; b < order_; ++b) {
        if (mul(a, b) == identity_ && mul(b, a) == identity_) {
          inv_[a] = b;
          found = true;
          break;
        }
      }
      if (!found) throw ArgumentError("element " + names_[a] + " has no two-sided inverse");
    }
  }

  void check_associative() const {
    for (Element a = 0; a < order_; ++a) {
      for (Element b = 0; b < order_; ++b) {
        const Element ab = mul(a, b);
        for (Element c = 0; c < order_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw ArgumentError("table is not associative at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
      }
    }
  }

  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  Element identity_ = 0;
  std::vector<std::string> names_;
  std::vector<Permutation> perms_;
};

/// The symmetric group on k points, 1 <= k <= 7. Elements are listed in
/// lexicographic order of their one-line notation, so index 0 is the identity.
/// Multiplication follows `Permutation::operator*`: `(p*q)(x) = q(p(x))`.
inline FiniteGroup symmetric_group(unsigned k) {
  if (k < 1 || k > 7) throw ArgumentError("symmetric group degree must be in [1, 7]");
  std::vector<Point> line(k);
  for (unsigned i = 0; i < k; ++i) line[i] = i;
  std::vector<Permutation> perms;
  do {
    perms.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));

  const std::size_t n = perms.size();
  std::vector<std::size_t> factorial(k + 1, 1);
  for (unsigned i = 1; i <= k; ++i) factorial[i] = factorial[i - 1] * i;
  // Lexicographic rank via the Lehmer code.
  auto rank = [&](const Permutation& p) {
    std::size_t r = 0;
    auto img = p.images();
    for (unsigned i = 0; i < k; ++i) {
      std::size_t smaller = 0;
      for (unsigned j = i + 1; j < k; ++j) smaller += img[j] < img[i];
      r += smaller * factorial[k - 1 - i];
    }
    return static_cast<Element>(r);
  };

  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = rank(perms[a] * perms[b]);
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : perms) names.push_back(to_cycle_string(p));

  FiniteGroup g(n, std::move(mul), std::move(names));
  g.perms_ = std::move(perms);
  // Associativity is inherited from composition of maps; still checked where
  // the cube of the order is small.
  if (n <= 120) g.check_associative();
  return g;
}

/// Z/n under addition; names are the integers 0..n-1.
inline FiniteGroup cyclic_group(std::size_t n) {
  if (n < 1) throw ArgumentError("cyclic group order must be positive");
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Element>((a + b) % n);
  }
  FiniteGroup g(n, std::move(mul), {});
  if (n <= 256) g.check_associative();
  return g;
}

}  // namespace bqlong
