#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bqlong/biquandle.hpp"
#include "bqlong/gauss_code.hpp"
#include "bqlong/parallel.hpp"

namespace bqlong {

/// One element per segment (semi-arc) of a long Gauss code; segment 0 is the
/// initial arc.
struct Coloring {
  std::vector<Element> segment_colors;

  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

/// Colors leaving a crossing, given the colors entering it.
///   positive: (under_out, over_out) = (a^b, b_a)
///   negative: (under_out, over_out) = (a^{bar b}, b_{bar a})
/// with a = under_in and b = over_in. The negative rule is the positive one
/// read against both orientations: S(under_out, over_out) = (over_in, under_in).
inline std::pair<Element, Element> crossing_outputs(const FiniteBiquandle& B, Sign sign,
                                                    Element under_in, Element over_in) {
  if (sign == Sign::Positive) return {B.up(under_in, over_in), B.down(over_in, under_in)};
  return {B.upbar(under_in, over_in), B.downbar(over_in, under_in)};
}

struct ColoringCheck {
  bool ok = true;
  std::optional<CrossingId> violating;  // smallest crossing id that fails

  explicit operator bool() const noexcept { return ok; }
};

inline ColoringCheck check_coloring(const LongGaussCode& code, const FiniteBiquandle& B,
                                    std::span<const Element> colors) {
  if (colors.size() != code.segment_count()) {
    throw ArgumentError("coloring has " + std::to_string(colors.size()) + " entries, expected " +
                        std::to_string(code.segment_count()));
  }
  for (Element c : colors) {
    if (c >= B.size()) throw ArgumentError("coloring entry out of range");
  }
  for (const CrossingIncidence& x : incidence(code)) {
    const auto [under_out, over_out] =
        crossing_outputs(B, x.sign, colors[x.under_in], colors[x.over_in]);
    if (colors[x.under_out] != under_out || colors[x.over_out] != over_out) {
      return {false, x.crossing};
    }
  }
  return {};
}

namespace detail {

// Left-to-right propagation with guessing. At the first pass of a crossing the
// partner strand's incoming color is guessed (all n values), which fixes both
// outgoing colors; the partner's output is stored and its input checked
// against the guess when the walk reaches it.
class ColoringWalker {
 public:
  ColoringWalker(const LongGaussCode& code, const FiniteBiquandle& B) : B_(B) {
    if (B.level() < Level::Birack) {
      throw AxiomError("coloring enumeration needs a birack, got a " +
                       std::string(to_string(B.level())));
    }
    const auto crossings = code.crossings();
    std::vector<bool> visited(crossings.size(), false);
    steps_.reserve(code.size());
    for (const Pass& p : code.passes()) {
      const auto slot = static_cast<std::size_t>(
          std::lower_bound(crossings.begin(), crossings.end(), p.crossing) - crossings.begin());
      steps_.push_back({slot, p.role, p.sign, !visited[slot]});
      visited[slot] = true;
    }
    guess_.assign(crossings.size(), 0);
    pending_.assign(crossings.size(), 0);
    colors_.assign(code.segment_count(), 0);
  }

  /// Index of the first guessing step, if any.
  std::optional<std::size_t> first_branch_step() const {
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (steps_[i].first_visit) return i;
    }
    return std::nullopt;
  }

  /// Visits every coloring with the given initial color. If `pinned_guess`
  /// is set, the first guessing step only tries that value.
  template <class Visit>
  void run(Element initial, std::optional<Element> pinned_guess, Visit&& visit) {
    colors_[0] = initial;
    pinned_ = pinned_guess;
    walk(0, visit);
  }

 private:
  struct Step {
    std::size_t slot;
    Role role;
    Sign sign;
    bool first_visit;
  };

  template <class Visit>
  void walk(std::size_t i, Visit& visit) {
    if (i == steps_.size()) {
      visit(std::span<const Element>(colors_));
      return;
    }
    const Step& st = steps_[i];
    if (!st.first_visit) {
      if (colors_[i] != guess_[st.slot]) return;
      colors_[i + 1] = pending_[st.slot];
      walk(i + 1, visit);
      return;
    }
    Element lo = 0;
    auto hi = static_cast<Element>(B_.size());
    if (pinned_) {
      lo = *pinned_;
      hi = lo + 1;
      pinned_.reset();
    }
    const Element own = colors_[i];
    for (Element g = lo; g < hi; ++g) {
      const bool under = st.role == Role::Under;
      const auto [under_out, over_out] =
          crossing_outputs(B_, st.sign, under ? own : g, under ? g : own);
      colors_[i + 1] = under ? under_out : over_out;
      guess_[st.slot] = g;
      pending_[st.slot] = under ? over_out : under_out;
      walk(i + 1, visit);
    }
  }

  const FiniteBiquandle& B_;
  std::vector<Step> steps_;
  std::vector<Element> guess_;
  std::vector<Element> pending_;
  std::vector<Element> colors_;
  std::optional<Element> pinned_;
};

// Splits the search into n independent branches: one per initial color when
// it is free, otherwise one per value of the first guess. Each branch runs on
// its own walker and reports colorings as visit_branch(branch, colors).
template <class Visit>
void run_branches(const LongGaussCode& code, const FiniteBiquandle& B,
                  std::optional<Element> initial, ParallelOptions parallel,
                  Visit&& visit_branch) {
  const auto n = static_cast<Element>(B.size());
  if (!initial) {
    parallel_for(n, parallel, [&](std::size_t p) {
      ColoringWalker walker(code, B);
      walker.run(static_cast<Element>(p), std::nullopt,
                 [&](std::span<const Element> c) { visit_branch(p, c); });
    });
    return;
  }
  ColoringWalker probe(code, B);
  if (!probe.first_branch_step()) {
    probe.run(*initial, std::nullopt, [&](std::span<const Element> c) { visit_branch(0, c); });
    return;
  }
  parallel_for(n, parallel, [&](std::size_t g) {
    ColoringWalker walker(code, B);
    walker.run(*initial, static_cast<Element>(g),
               [&](std::span<const Element> c) { visit_branch(g, c); });
  });
}

inline void check_element(const FiniteBiquandle& B, Element e, const char* what) {
  if (e >= B.size()) {
    throw ArgumentError(std::string(what) + " " + std::to_string(e) + " outside the carrier");
  }
}

}  // namespace detail

/// Calls `visit(span of segment colors)` for every coloring, sequentially, in
/// walk order (not canonical order).
template <class Visit>
void for_each_coloring(const LongGaussCode& code, const FiniteBiquandle& B,
                       std::optional<Element> initial, Visit&& visit) {
  detail::ColoringWalker walker(code, B);
  if (initial) {
    detail::check_element(B, *initial, "initial color");
    walker.run(*initial, std::nullopt, visit);
    return;
  }
  for (Element p = 0; p < B.size(); ++p) walker.run(p, std::nullopt, visit);
}

/// All colorings (restricted to segment 0 == initial when given), sorted
/// lexicographically by segment colors. Independent of the worker count.
inline std::vector<Coloring> enumerate_colorings(const LongGaussCode& code,
                                                 const FiniteBiquandle& B,
                                                 std::optional<Element> initial = std::nullopt,
                                                 ParallelOptions parallel = {}) {
  if (initial) detail::check_element(B, *initial, "initial color");
  std::vector<std::vector<Coloring>> per_branch(B.size());
  detail::run_branches(code, B, initial, parallel,
                       [&](std::size_t branch, std::span<const Element> c) {
                         per_branch[branch].push_back({{c.begin(), c.end()}});
                       });
  std::vector<Coloring> all;
  for (auto& branch : per_branch) {
    all.insert(all.end(), std::make_move_iterator(branch.begin()),
               std::make_move_iterator(branch.end()));
  }
  std::sort(all.begin(), all.end());
  return all;
}

/// |Col(D, B, p)| without materializing the colorings.
inline std::uint64_t count_fixed(const LongGaussCode& code, const FiniteBiquandle& B, Element p,
                                 ParallelOptions parallel = {}) {
  detail::check_element(B, p, "initial color");
  std::vector<std::uint64_t> per_branch(B.size(), 0);
  detail::run_branches(code, B, p, parallel,
                       [&](std::size_t branch, std::span<const Element>) { ++per_branch[branch]; });
  std::uint64_t total = 0;
  for (auto c : per_branch) total += c;
  return total;
}

/// Total number of colorings.
inline std::uint64_t count_colorings(const LongGaussCode& code, const FiniteBiquandle& B,
                                     ParallelOptions parallel = {}) {
  std::vector<std::uint64_t> per_branch(B.size(), 0);
  detail::run_branches(code, B, std::nullopt, parallel,
                       [&](std::size_t branch, std::span<const Element>) { ++per_branch[branch]; });
  std::uint64_t total = 0;
  for (auto c : per_branch) total += c;
  return total;
}

}  // namespace bqlong
