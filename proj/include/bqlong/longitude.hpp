#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "bqlong/coloring.hpp"

namespace bqlong {

/// One up-operator of a longitude: x -> x^u (exponent +1) or its inverse
/// permutation x -> x^{u^-1} (exponent -1).
struct WordToken {
  Element element = 0;
  int exponent = 1;

  friend auto operator<=>(const WordToken&, const WordToken&) = default;
};

/// Operators collected along the knot, two per classical crossing, applied
/// left to right.
struct LongitudeWord {
  std::vector<WordToken> tokens;

  friend auto operator<=>(const LongitudeWord&, const LongitudeWord&) = default;
};

/// The bijection x -> L(C)(x) of the carrier, as an image vector.
struct LongitudeMap {
  std::vector<Element> images;

  friend auto operator<=>(const LongitudeMap&, const LongitudeMap&) = default;
};

/// Formal sum of elements, kept as a sorted multiset.
struct InvariantSum {
  std::vector<Element> terms;

  friend auto operator<=>(const InvariantSum&, const InvariantSum&) = default;
};

/// Which element each pass contributes, and with which exponent. `Standard`
/// takes the label the left normal of the traveled strand points at:
///   under, positive  -> (over_in,  +1)
///   over,  positive  -> (under_out, -1)
///   under, negative  -> (over_out, -1)
///   over,  negative  -> (under_in, +1)
/// `FlippedOverPositive` inverts the exponent of the second case; it exists
/// only so tests can check that the move harness catches a wrong rule.
enum class TokenRule { Standard, FlippedOverPositive };

namespace detail {

inline WordToken token_for(const Pass& pass, const CrossingIncidence& x,
                           std::span<const Element> colors, TokenRule rule) {
  if (pass.sign == Sign::Positive) {
    if (pass.role == Role::Under) return {colors[x.over_in], +1};
    return {colors[x.under_out], rule == TokenRule::FlippedOverPositive ? +1 : -1};
  }
  if (pass.role == Role::Under) return {colors[x.over_out], -1};
  return {colors[x.under_in], +1};
}

// Incidence indexed by pass position, for the hot loops below.
inline std::vector<CrossingIncidence> incidence_by_pass(const LongGaussCode& code) {
  const auto by_crossing = incidence(code);
  std::vector<CrossingIncidence> out;
  out.reserve(code.size());
  for (const Pass& p : code.passes()) {
    out.push_back(*std::lower_bound(
        by_crossing.begin(), by_crossing.end(), p.crossing,
        [](const CrossingIncidence& c, CrossingId id) { return c.crossing < id; }));
  }
  return out;
}

inline LongitudeWord word_of(const LongGaussCode& code,
                             const std::vector<CrossingIncidence>& by_pass,
                             std::span<const Element> colors, TokenRule rule) {
  LongitudeWord w;
  w.tokens.reserve(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    w.tokens.push_back(token_for(code[i], by_pass[i], colors, rule));
  }
  return w;
}

inline void require_birack(const FiniteBiquandle& B) {
  if (B.level() < Level::Birack) {
    throw AxiomError("longitudes need inverse up-operators, i.e. a birack");
  }
}

}  // namespace detail

/// Walks the passes left to right, one token per pass. Throws ArgumentError
/// if `coloring` is not a valid coloring of `code`.
inline LongitudeWord extract_word(const LongGaussCode& code, const FiniteBiquandle& B,
                                  const Coloring& coloring, TokenRule rule = TokenRule::Standard) {
  if (auto check = check_coloring(code, B, coloring.segment_colors); !check) {
    throw ArgumentError("not a coloring: crossing " + std::to_string(*check.violating) +
                        " violates the crossing relation");
  }
  return detail::word_of(code, detail::incidence_by_pass(code), coloring.segment_colors, rule);
}

inline Element apply_word(const FiniteBiquandle& B, const LongitudeWord& w, Element x) {
  detail::require_birack(B);
  for (const WordToken& t : w.tokens) {
    if (t.element >= B.size() || x >= B.size()) throw ArgumentError("element out of range");
    x = t.exponent > 0 ? B.up(x, t.element) : B.up_inv(x, t.element);
  }
  return x;
}

namespace detail {

inline LongitudeMap map_of(const FiniteBiquandle& B, const LongitudeWord& w) {
  const auto n = static_cast<Element>(B.size());
  LongitudeMap m;
  m.images.resize(n);
  std::vector<bool> hit(n, false);
  for (Element x = 0; x < n; ++x) {
    Element y = x;
    for (const WordToken& t : w.tokens) {
      y = t.exponent > 0 ? B.up(y, t.element) : B.up_inv(y, t.element);
    }
    if (hit[y]) throw InternalError("longitude map is not a bijection");
    hit[y] = true;
    m.images[x] = y;
  }
  return m;
}

}  // namespace detail

inline LongitudeMap longitude_map(const LongGaussCode& code, const FiniteBiquandle& B,
                                  const Coloring& coloring, TokenRule rule = TokenRule::Standard) {
  detail::require_birack(B);
  return detail::map_of(B, extract_word(code, B, coloring, rule));
}

/// {L(C) : C in Col(D, B, p)} as a sorted list (a multiset of maps).
inline std::vector<LongitudeMap> invariant_family(const LongGaussCode& code,
                                                  const FiniteBiquandle& B, Element p,
                                                  ParallelOptions parallel = {},
                                                  TokenRule rule = TokenRule::Standard) {
  detail::require_birack(B);
  detail::check_element(B, p, "initial color");
  const auto by_pass = detail::incidence_by_pass(code);
  std::vector<std::vector<LongitudeMap>> per_branch(B.size());
  detail::run_branches(code, B, p, parallel, [&](std::size_t branch, std::span<const Element> c) {
    per_branch[branch].push_back(detail::map_of(B, detail::word_of(code, by_pass, c, rule)));
  });
  std::vector<LongitudeMap> family;
  for (auto& branch : per_branch) {
    family.insert(family.end(), std::make_move_iterator(branch.begin()),
                  std::make_move_iterator(branch.end()));
  }
  std::sort(family.begin(), family.end());
  return family;
}

/// The formal sum of L(C)(x) over Col(D, B, p), as a sorted multiset.
inline InvariantSum invariant_sum(const LongGaussCode& code, const FiniteBiquandle& B, Element p,
                                  Element x, ParallelOptions parallel = {},
                                  TokenRule rule = TokenRule::Standard) {
  detail::require_birack(B);
  detail::check_element(B, p, "initial color");
  detail::check_element(B, x, "argument");
  const auto by_pass = detail::incidence_by_pass(code);
  std::vector<std::vector<Element>> per_branch(B.size());
  detail::run_branches(code, B, p, parallel, [&](std::size_t branch, std::span<const Element> c) {
    Element y = x;
    for (const WordToken& t : detail::word_of(code, by_pass, c, rule).tokens) {
      y = t.exponent > 0 ? B.up(y, t.element) : B.up_inv(y, t.element);
    }
    per_branch[branch].push_back(y);
  });
  InvariantSum sum;
  for (const auto& branch : per_branch) sum.terms.insert(sum.terms.end(), branch.begin(), branch.end());
  std::sort(sum.terms.begin(), sum.terms.end());
  return sum;
}

/// First position at which two canonical lists differ; an absent side means
/// that list ended first.
template <class T>
struct Difference {
  std::size_t position = 0;
  std::optional<T> left;
  std::optional<T> right;
};

template <class T>
std::optional<Difference<T>> first_difference(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) return Difference<T>{i, a[i], b[i]};
  }
  if (a.size() == b.size()) return std::nullopt;
  Difference<T> d;
  d.position = common;
  if (a.size() > common) d.left = a[common];
  if (b.size() > common) d.right = b[common];
  return d;
}

struct InvariantComparison {
  bool equal = true;
  /// monostate when equal; a map difference when families were compared; an
  /// element difference when sums were compared.
  std::variant<std::monostate, Difference<LongitudeMap>, Difference<Element>> witness;
};

/// Compares invariant families, or invariant sums at `x` when given.
inline InvariantComparison compare_invariants(const LongGaussCode& d1, const LongGaussCode& d2,
                                              const FiniteBiquandle& B, Element p,
                                              std::optional<Element> x = std::nullopt,
                                              ParallelOptions parallel = {}) {
  InvariantComparison result;
  if (x) {
    if (auto d = first_difference(invariant_sum(d1, B, p, *x, parallel).terms,
                                  invariant_sum(d2, B, p, *x, parallel).terms)) {
      result.equal = false;
      result.witness = *d;
    }
    return result;
  }
  if (auto d = first_difference(invariant_family(d1, B, p, parallel),
                                invariant_family(d2, B, p, parallel))) {
    result.equal = false;
    result.witness = *d;
  }
  return result;
}

}  // namespace bqlong
