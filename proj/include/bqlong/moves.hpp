#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bqlong/gauss_code.hpp"

// Reidemeister moves acting on signed Gauss codes. Positions are pass
// positions in [0, size()]: inserting at position k puts the new passes
// between the k-th and (k+1)-th existing pass, i.e. on segment k.

namespace bqlong {

/// Order of the two passes of a first-move kink, and its sign.
enum class KinkKind { UnderOverPositive, OverUnderPositive, UnderOverNegative, OverUnderNegative };

inline constexpr KinkKind all_kink_kinds[] = {KinkKind::UnderOverPositive,
                                              KinkKind::OverUnderPositive,
                                              KinkKind::UnderOverNegative,
                                              KinkKind::OverUnderNegative};

inline std::string to_string(KinkKind k) {
  switch (k) {
    case KinkKind::UnderOverPositive: return "UO+";
    case KinkKind::OverUnderPositive: return "OU+";
    case KinkKind::UnderOverNegative: return "UO-";
    case KinkKind::OverUnderNegative: return "OU-";
  }
  return "?";
}

namespace detail {

inline void check_position(const LongGaussCode& code, std::size_t position) {
  if (position > code.size()) {
    throw ArgumentError("position " + std::to_string(position) + " outside [0, " +
                        std::to_string(code.size()) + "]");
  }
}

inline CrossingId fresh_id(const LongGaussCode& code, std::optional<CrossingId> id) {
  if (!id) return code.max_crossing_id() + 1;
  if (*id == 0) throw ArgumentError("crossing ids start at 1");
  for (const Pass& p : code.passes()) {
    if (p.crossing == *id) throw ArgumentError("crossing id " + std::to_string(*id) + " in use");
  }
  return *id;
}

}  // namespace detail

/// Inserts a kink (one new crossing, two adjacent passes) at `position`. The
/// new crossing gets `id`, or one more than the largest id in use.
inline LongGaussCode r1_insert(const LongGaussCode& code, std::size_t position, KinkKind kind,
                               std::optional<CrossingId> id = std::nullopt) {
  detail::check_position(code, position);
  const CrossingId c = detail::fresh_id(code, id);
  const bool under_first =
      kind == KinkKind::UnderOverPositive || kind == KinkKind::UnderOverNegative;
  const Sign sign = kind == KinkKind::UnderOverPositive || kind == KinkKind::OverUnderPositive
                        ? Sign::Positive
                        : Sign::Negative;
  std::vector<Pass> passes(code.passes().begin(), code.passes().end());
  const Pass first{c, under_first ? Role::Under : Role::Over, sign};
  const Pass second{c, under_first ? Role::Over : Role::Under, sign};
  passes.insert(passes.begin() + static_cast<std::ptrdiff_t>(position), {first, second});
  return LongGaussCode(std::move(passes));
}

/// Removes the kink whose passes sit at `position` and `position + 1`.
inline LongGaussCode r1_delete(const LongGaussCode& code, std::size_t position) {
  if (position + 1 >= code.size() ||
      code[position].crossing != code[position + 1].crossing) {
    throw ArgumentError("no first-move kink at position " + std::to_string(position));
  }
  std::vector<Pass> passes(code.passes().begin(), code.passes().end());
  passes.erase(passes.begin() + static_cast<std::ptrdiff_t>(position),
               passes.begin() + static_cast<std::ptrdiff_t>(position) + 2);
  return LongGaussCode(std::move(passes));
}

/// Positions at which `r1_delete` applies.
inline std::vector<std::size_t> r1_sites(const LongGaussCode& code) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i + 1 < code.size(); ++i) {
    if (code[i].crossing == code[i + 1].crossing) sites.push_back(i);
  }
  return sites;
}

/// Shape of a second-move bigon. The strand piece inserted at `pos_a` passes
/// the two new crossings c, c' in that order with role `first_role`; the
/// piece at `pos_b` takes the other role, meeting them as (c', c) when
/// antiparallel and (c, c') when parallel. c carries `first_sign`, c' the
/// opposite sign.
struct R2Variant {
  Role first_role = Role::Over;
  bool parallel = false;
  Sign first_sign = Sign::Positive;
};

/// Inserts a second-move bigon on segments `pos_a <= pos_b` (positions in
/// the original code). `ids` defaults to the next two unused maxima.
inline LongGaussCode r2_insert(const LongGaussCode& code, std::size_t pos_a, std::size_t pos_b,
                               R2Variant variant = {},
                               std::optional<std::pair<CrossingId, CrossingId>> ids = std::nullopt) {
  detail::check_position(code, pos_a);
  detail::check_position(code, pos_b);
  if (pos_a > pos_b) throw ArgumentError("r2_insert needs pos_a <= pos_b");
  CrossingId c1 = code.max_crossing_id() + 1;
  CrossingId c2 = c1 + 1;
  if (ids) {
    c1 = detail::fresh_id(code, ids->first);
    c2 = detail::fresh_id(code, ids->second);
    if (c1 == c2) throw ArgumentError("r2_insert needs two distinct crossing ids");
  }
  const Sign s1 = variant.first_sign;
  const Sign s2 = opposite(s1);
  const Role ra = variant.first_role;
  const Role rb = opposite(ra);
  std::vector<Pass> passes(code.passes().begin(), code.passes().end());
  const std::vector<Pass> piece_b = variant.parallel
                                        ? std::vector<Pass>{{c1, rb, s1}, {c2, rb, s2}}
                                        : std::vector<Pass>{{c2, rb, s2}, {c1, rb, s1}};
  passes.insert(passes.begin() + static_cast<std::ptrdiff_t>(pos_b), piece_b.begin(),
                piece_b.end());
  passes.insert(passes.begin() + static_cast<std::ptrdiff_t>(pos_a),
                {Pass{c1, ra, s1}, Pass{c2, ra, s2}});
  return LongGaussCode(std::move(passes));
}

namespace detail {

inline bool is_r2_pattern(const LongGaussCode& code, std::size_t i, std::size_t j) {
  if (j < i + 2 || j + 1 >= code.size()) return false;
  const Pass& a1 = code[i];
  const Pass& a2 = code[i + 1];
  const Pass& b1 = code[j];
  const Pass& b2 = code[j + 1];
  if (a1.crossing == a2.crossing || a1.role != a2.role || b1.role != b2.role) return false;
  if (a1.sign == a2.sign) return false;
  const bool antiparallel = b1.crossing == a2.crossing && b2.crossing == a1.crossing;
  const bool parallel = b1.crossing == a1.crossing && b2.crossing == a2.crossing;
  return antiparallel || parallel;
}

}  // namespace detail

/// Inverse of `r2_insert` with the same positions: removes the passes at
/// `pos_a`, `pos_a+1` and `pos_b+2`, `pos_b+3` when they form a bigon.
inline LongGaussCode r2_delete(const LongGaussCode& code, std::size_t pos_a, std::size_t pos_b) {
  if (pos_a > pos_b || !detail::is_r2_pattern(code, pos_a, pos_b + 2)) {
    throw ArgumentError("no second-move bigon at positions " + std::to_string(pos_a) + ", " +
                        std::to_string(pos_b));
  }
  std::vector<Pass> passes(code.passes().begin(), code.passes().end());
  const auto j = static_cast<std::ptrdiff_t>(pos_b + 2);
  passes.erase(passes.begin() + j, passes.begin() + j + 2);
  const auto i = static_cast<std::ptrdiff_t>(pos_a);
  passes.erase(passes.begin() + i, passes.begin() + i + 2);
  return LongGaussCode(std::move(passes));
}

/// (pos_a, pos_b) argument pairs accepted by `r2_delete`.
inline std::vector<std::pair<std::size_t, std::size_t>> r2_sites(const LongGaussCode& code) {
  std::vector<std::pair<std::size_t, std::size_t>> sites;
  for (std::size_t i = 0; i + 3 < code.size(); ++i) {
    for (std::size_t j = i + 2; j + 1 < code.size(); ++j) {
      if (detail::is_r2_pattern(code, i, j)) sites.emplace_back(i, j - 2);
    }
  }
  return sites;
}

/// Two codes related by one third Reidemeister move.
struct R3Fixture {
  std::string name;
  LongGaussCode before;
  LongGaussCode after;
};

/// Golden third-move pairs for the all-positive braid-like move
/// s1 s2 s1 = s2 s1 s2 (left strand over). With crossings x, y, z the three
/// strand pieces read
///   before: A = (O x, O y)  B = (U x, O z)  C = (U y, U z)
///   after:  A = (O y, O x)  B = (O z, U x)  C = (U z, U y)
/// and the fixtures place the pieces along the long knot in every order,
/// bare and interleaved with a virtual trefoil.
inline std::vector<R3Fixture> r3_fixture_pairs() {
  const Sign s = Sign::Positive;
  auto pieces = [&](CrossingId x, CrossingId y, CrossingId z, bool after) {
    std::vector<std::vector<Pass>> p(3);
    if (!after) {
      p[0] = {{x, Role::Over, s}, {y, Role::Over, s}};
      p[1] = {{x, Role::Under, s}, {z, Role::Over, s}};
      p[2] = {{y, Role::Under, s}, {z, Role::Under, s}};
    } else {
      p[0] = {{y, Role::Over, s}, {x, Role::Over, s}};
      p[1] = {{z, Role::Over, s}, {x, Role::Under, s}};
      p[2] = {{z, Role::Under, s}, {y, Role::Under, s}};
    }
    return p;
  };
  auto join = [](std::initializer_list<std::vector<Pass>> parts) {
    std::vector<Pass> out;
    for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return LongGaussCode(std::move(out));
  };

  std::vector<R3Fixture> fixtures;
  const int orders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const char* names = "ABC";
  for (const auto& order : orders) {
    const auto lhs = pieces(1, 2, 3, false);
    const auto rhs = pieces(1, 2, 3, true);
    std::string name = "bare ";
    for (int k : order) name += names[k];
    fixtures.push_back({name, join({lhs[order[0]], lhs[order[1]], lhs[order[2]]}),
                        join({rhs[order[0]], rhs[order[1]], rhs[order[2]]})});
  }

  // Interleaved with the trefoil U1+ U2+ O1+ O2+.
  const std::vector<Pass> u1{{1, Role::Under, s}}, u2{{2, Role::Under, s}},
      o1{{1, Role::Over, s}}, o2{{2, Role::Over, s}};
  {
    const auto lhs = pieces(3, 4, 5, false);
    const auto rhs = pieces(3, 4, 5, true);
    fixtures.push_back({"trefoil A U1 U2 B O1 C O2",
                        join({lhs[0], u1, u2, lhs[1], o1, lhs[2], o2}),
                        join({rhs[0], u1, u2, rhs[1], o1, rhs[2], o2})});
    fixtures.push_back({"trefoil U1 C U2 A O1 O2 B",
                        join({u1, lhs[2], u2, lhs[0], o1, o2, lhs[1]}),
                        join({u1, rhs[2], u2, rhs[0], o1, o2, rhs[1]})});
  }
  return fixtures;
}

}  // namespace bqlong
