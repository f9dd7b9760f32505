#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bqlong/errors.hpp"

namespace bqlong {

using CrossingId = std::uint32_t;

enum class Role : std::uint8_t { Over, Under };
enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

inline char role_char(Role r) { return r == Role::Over ? 'O' : 'U'; }
inline char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }
inline Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }
inline Sign opposite(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

/// One visit of the long knot to a classical crossing.
struct Pass {
  CrossingId crossing = 0;
  Role role = Role::Under;
  Sign sign = Sign::Positive;

  friend auto operator<=>(const Pass&, const Pass&) = default;
};

/// Rejected Gauss code. `position` is the 1-based index of the offending
/// token (pass).
class GaussCodeError : public Error {
 public:
  enum class Kind { BadToken, UnpairedCrossing, RepeatedCrossing, SameRole, SignMismatch };

  GaussCodeError(Kind kind, std::size_t position, const std::string& detail)
      : Error(describe(kind) + " at token " + std::to_string(position) + ": " + detail),
        kind_(kind),
        position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  static std::string describe(Kind kind) {
    switch (kind) {
      case Kind::BadToken: return "bad token";
      case Kind::UnpairedCrossing: return "crossing visited once";
      case Kind::RepeatedCrossing: return "crossing visited more than twice";
      case Kind::SameRole: return "both passes have the same role";
      case Kind::SignMismatch: return "sign mismatch";
    }
    return "invalid code";
  }

  Kind kind_;
  std::size_t position_;
};

/// A long virtual knot diagram as its signed Gauss code: the classical
/// crossing passes met when traveling from left to right. Virtual crossings
/// are not represented; they do not affect colorings.
///
/// Every crossing appears exactly twice, once over and once under, with the
/// same sign. Segment i is the semi-arc after pass i: segment 0 is the
/// initial arc and segment size() the final one.
class LongGaussCode {
 public:
  LongGaussCode() = default;

  explicit LongGaussCode(std::vector<Pass> passes) : passes_(std::move(passes)) { validate(); }

  std::span<const Pass> passes() const noexcept { return passes_; }
  std::size_t size() const noexcept { return passes_.size(); }
  bool empty() const noexcept { return passes_.empty(); }
  std::size_t segment_count() const noexcept { return passes_.size() + 1; }
  std::size_t crossing_count() const noexcept { return passes_.size() / 2; }
  const Pass& operator[](std::size_t i) const { return passes_[i]; }

  /// Crossing ids in increasing order.
  std::vector<CrossingId> crossings() const {
    std::vector<CrossingId> ids;
    for (const Pass& p : passes_) ids.push_back(p.crossing);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }

  CrossingId max_crossing_id() const noexcept {
    CrossingId m = 0;
    for (const Pass& p : passes_) m = std::max(m, p.crossing);
    return m;
  }

  friend auto operator<=>(const LongGaussCode&, const LongGaussCode&) = default;

 private:
  void validate() const {
    using Kind = GaussCodeError::Kind;
    struct Seen {
      std::size_t count = 0;
      std::size_t position = 0;
      Pass first;
    };
    std::map<CrossingId, Seen> seen;
    for (std::size_t i = 0; i < passes_.size(); ++i) {
      const Pass& p = passes_[i];
      const std::size_t pos = i + 1;
      const std::string label = std::string(1, role_char(p.role)) + std::to_string(p.crossing) +
                                sign_char(p.sign);
      if (p.crossing == 0) throw GaussCodeError(Kind::BadToken, pos, "crossing ids start at 1");
      Seen& s = seen[p.crossing];
      ++s.count;
      if (s.count == 1) {
        s.position = pos;
        s.first = p;
      } else if (s.count == 2) {
        if (s.first.role == p.role) throw GaussCodeError(Kind::SameRole, pos, label);
        if (s.first.sign != p.sign) throw GaussCodeError(Kind::SignMismatch, pos, label);
      } else {
        throw GaussCodeError(Kind::RepeatedCrossing, pos, label);
      }
    }
    std::size_t first_unpaired = 0;
    CrossingId unpaired = 0;
    for (const auto& [id, s] : seen) {
      if (s.count == 1 && (first_unpaired == 0 || s.position < first_unpaired)) {
        first_unpaired = s.position;
        unpaired = id;
      }
    }
    if (first_unpaired != 0) {
      throw GaussCodeError(Kind::UnpairedCrossing, first_unpaired,
                           "crossing " + std::to_string(unpaired));
    }
  }

  std::vector<Pass> passes_;
};

/// Parses whitespace-separated tokens `O<k><s>` / `U<k><s>` with k >= 1 and
/// s in {+,-}. The empty string is the trivial long knot.
inline LongGaussCode parse_gauss_code(std::string_view text) {
  using Kind = GaussCodeError::Kind;
  std::vector<Pass> passes;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string_view token = text.substr(start, i - start);
    const std::size_t pos = passes.size() + 1;
    auto bad = [&](const char* why) {
      return GaussCodeError(Kind::BadToken, pos, "'" + std::string(token) + "' " + why);
    };
    if (token.size() < 3) throw bad("is too short");
    Pass p;
    if (token.front() == 'O') {
      p.role = Role::Over;
    } else if (token.front() == 'U') {
      p.role = Role::Under;
    } else {
      throw bad("must start with O or U");
    }
    if (token.back() == '+') {
      p.sign = Sign::Positive;
    } else if (token.back() == '-') {
      p.sign = Sign::Negative;
    } else {
      throw bad("must end with + or -");
    }
    const std::string_view digits = token.substr(1, token.size() - 2);
    if (digits.size() > 9 || digits.front() == '0' ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw bad("needs a positive crossing number");
    }
    p.crossing = static_cast<CrossingId>(std::stoul(std::string(digits)));
    passes.push_back(p);
  }
  return LongGaussCode(std::move(passes));
}

/// Canonical text: tokens joined by single spaces.
inline std::string to_string(const LongGaussCode& code) {
  std::string out;
  for (const Pass& p : code.passes()) {
    if (!out.empty()) out += ' ';
    out += role_char(p.role);
    out += std::to_string(p.crossing);
    out += sign_char(p.sign);
  }
  return out;
}

/// `{"passes":[{"c":1,"role":"U","sign":1}, ...]}`
inline nlohmann::ordered_json to_json(const LongGaussCode& code) {
  nlohmann::ordered_json passes = nlohmann::ordered_json::array();
  for (const Pass& p : code.passes()) {
    nlohmann::ordered_json entry;
    entry["c"] = p.crossing;
    entry["role"] = std::string(1, role_char(p.role));
    entry["sign"] = static_cast<int>(p.sign);
    passes.push_back(std::move(entry));
  }
  nlohmann::ordered_json j;
  j["passes"] = std::move(passes);
  return j;
}

inline LongGaussCode gauss_code_from_json(const nlohmann::json& j) {
  using Kind = GaussCodeError::Kind;
  std::vector<Pass> passes;
  if (!j.is_object() || !j.contains("passes") || !j["passes"].is_array()) {
    throw ArgumentError("expected an object with a 'passes' array");
  }
  for (const auto& entry : j["passes"]) {
    const std::size_t pos = passes.size() + 1;
    if (!entry.is_object() || !entry.contains("c") || !entry.contains("role") ||
        !entry.contains("sign") || !entry["c"].is_number_unsigned() ||
        !entry["role"].is_string() || !entry["sign"].is_number_integer()) {
      throw GaussCodeError(Kind::BadToken, pos, "expected {\"c\":<k>,\"role\":\"O\"|\"U\",\"sign\":±1}");
    }
    Pass p;
    p.crossing = entry["c"].get<CrossingId>();
    const auto role = entry["role"].get<std::string>();
    const auto sign = entry["sign"].get<int>();
    if (role != "O" && role != "U") throw GaussCodeError(Kind::BadToken, pos, "role must be O or U");
    if (sign != 1 && sign != -1) throw GaussCodeError(Kind::BadToken, pos, "sign must be 1 or -1");
    p.role = role == "O" ? Role::Over : Role::Under;
    p.sign = sign == 1 ? Sign::Positive : Sign::Negative;
    passes.push_back(p);
  }
  return LongGaussCode(std::move(passes));
}

/// The same long knot traveled from right to left. Reversing both strands of
/// a crossing keeps its sign, so only the pass order changes.
inline LongGaussCode reverse_orientation(const LongGaussCode& code) {
  std::vector<Pass> passes(code.passes().rbegin(), code.passes().rend());
  return LongGaussCode(std::move(passes));
}

/// Segment slots of one crossing. Pass i (1-based) consumes segment i-1 and
/// produces segment i.
struct CrossingIncidence {
  CrossingId crossing = 0;
  Sign sign = Sign::Positive;
  std::size_t under_in = 0;
  std::size_t under_out = 0;
  std::size_t over_in = 0;
  std::size_t over_out = 0;

  friend bool operator==(const CrossingIncidence&, const CrossingIncidence&) = default;
};

/// Per-crossing incidence, ordered by crossing id.
inline std::vector<CrossingIncidence> incidence(const LongGaussCode& code) {
  std::map<CrossingId, CrossingIncidence> by_id;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const Pass& p = code[i];
    CrossingIncidence& c = by_id[p.crossing];
    c.crossing = p.crossing;
    c.sign = p.sign;
    if (p.role == Role::Under) {
      c.under_in = i;
      c.under_out = i + 1;
    } else {
      c.over_in = i;
      c.over_out = i + 1;
    }
  }
  std::vector<CrossingIncidence> out;
  out.reserve(by_id.size());
  for (auto& [id, c] : by_id) out.push_back(c);
  return out;
}

}  // namespace bqlong
