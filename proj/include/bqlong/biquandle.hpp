#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bqlong/errors.hpp"
#include "bqlong/finite_group.hpp"
#include "bqlong/parallel.hpp"

namespace bqlong {

/// How far up the switch -> birack -> biquandle hierarchy a set of tables goes.
enum class Level { None = 0, Switch = 1, Birack = 2, Biquandle = 3 };

inline std::string_view to_string(Level level) {
  switch (level) {
    case Level::None: return "none";
    case Level::Switch: return "switch";
    case Level::Birack: return "birack";
    case Level::Biquandle: return "biquandle";
  }
  return "?";
}

/// Raw candidate tables on {0..n-1}: `up[a*n+b] = a^b`, `down[a*n+b] = a_b`.
/// The switch they define is S(a,b) = (b_a, a^b). Nothing is assumed about
/// them until a verifier has run.
struct OperationTables {
  std::size_t n = 0;
  std::vector<Element> up;
  std::vector<Element> down;
  std::vector<std::string> names;  // empty, or one display name per element

  Element up_at(Element a, Element b) const { return up[a * n + b]; }
  Element down_at(Element a, Element b) const { return down[a * n + b]; }

  /// Throws TableFormatError on wrong shapes or out-of-range entries.
  void validate_shape() const {
    if (n == 0) throw TableFormatError("carrier size must be positive");
    if (up.size() != n * n) throw TableFormatError("up table must have n*n entries");
    if (down.size() != n * n) throw TableFormatError("down table must have n*n entries");
    if (!names.empty() && names.size() != n) {
      throw TableFormatError("expected one name per element");
    }
    for (std::size_t i = 0; i < n * n; ++i) {
      if (up[i] >= n) {
        throw TableFormatError("up[" + std::to_string(i / n) + "][" + std::to_string(i % n) +
                               "] out of range");
      }
      if (down[i] >= n) {
        throw TableFormatError("down[" + std::to_string(i / n) + "][" + std::to_string(i % n) +
                               "] out of range");
      }
    }
  }

  std::string name(Element a) const { return names.empty() ? std::to_string(a) : names[a]; }

  friend bool operator==(const OperationTables&, const OperationTables&) = default;
};

/// Outcome of an axiom check. On failure `axiom` names the violated property
/// and `witness` holds the lexicographically first offending tuple.
struct AxiomCheck {
  bool ok = true;
  std::string axiom;
  std::vector<Element> witness;

  explicit operator bool() const noexcept { return ok; }

  static AxiomCheck pass() { return {}; }
  static AxiomCheck fail(std::string axiom, std::vector<Element> witness) {
    return {false, std::move(axiom), std::move(witness)};
  }

  /// Human-readable failure, rendering witness elements with `names` when
  /// given.
  std::string describe(const std::vector<std::string>& names = {}) const {
    if (ok) return "ok";
    std::string out = axiom + " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out += ", ";
      out += names.empty() ? std::to_string(witness[i]) : names[witness[i]];
    }
    return out + ")";
  }
};

namespace detail {

// Inverse of every map x -> table[x*n+a]: result[y*n+a] = x. Returns the first
// column a whose map is not injective (with the colliding x's) on failure.
struct ColumnInverse {
  std::vector<Element> inverse;
  std::optional<std::array<Element, 3>> failure;  // {a, x1, x2}
};

inline ColumnInverse invert_columns(std::size_t n, const std::vector<Element>& table) {
  ColumnInverse r;
  r.inverse.assign(n * n, static_cast<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element x = 0; x < n; ++x) {
      const Element y = table[x * n + a];
      Element& slot = r.inverse[y * n + a];
      if (slot != n) {
        r.failure = std::array<Element, 3>{a, slot, x};
        r.inverse.clear();
        return r;
      }
      slot = x;
    }
  }
  return r;
}

}  // namespace detail

/// Checks that S(a,b) = (b_a, a^b) is a bijection of pairs and satisfies the
/// set-theoretic Yang-Baxter relation
///   (S x id)(id x S)(S x id) = (id x S)(S x id)(id x S)
/// on every triple. The triple space is split over `a` when threads > 1; the
/// reported witness is the same for any split.
inline AxiomCheck verify_switch(const OperationTables& t, ParallelOptions parallel = {}) {
  t.validate_shape();
  const std::size_t n = t.n;
  auto S = [&](Element a, Element b) {
    return std::pair<Element, Element>{t.down_at(b, a), t.up_at(a, b)};
  };

  std::vector<bool> hit(n * n, false);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      auto [s, u] = S(a, b);
      if (hit[s * n + u]) return AxiomCheck::fail("switch is not a bijection of pairs", {a, b});
      hit[s * n + u] = true;
    }
  }

  auto failure = first_failure<std::vector<Element>>(
      n, parallel, [&](std::size_t ai) -> std::optional<std::vector<Element>> {
        const auto a = static_cast<Element>(ai);
        for (Element b = 0; b < n; ++b) {
          for (Element c = 0; c < n; ++c) {
            // Left side: S on (1,2), then (2,3), then (1,2).
            auto [l1, l2] = S(a, b);
            Element l3 = c;
            std::tie(l2, l3) = S(l2, l3);
            std::tie(l1, l2) = S(l1, l2);
            // Right side: S on (2,3), then (1,2), then (2,3).
            Element r1 = a;
            auto [r2, r3] = S(b, c);
            std::tie(r1, r2) = S(r1, r2);
            std::tie(r2, r3) = S(r2, r3);
            if (l1 != r1 || l2 != r2 || l3 != r3) return std::vector<Element>{a, b, c};
          }
        }
        return std::nullopt;
      });
  if (failure) return AxiomCheck::fail("Yang-Baxter relation fails", *failure);
  return AxiomCheck::pass();
}

/// Checks that x -> x^a and x -> x_a are permutations for every a. Witness:
/// (a, x1, x2) with x1 != x2 mapped to the same image.
inline AxiomCheck verify_birack(const OperationTables& t) {
  t.validate_shape();
  auto up = detail::invert_columns(t.n, t.up);
  auto down = detail::invert_columns(t.n, t.down);
  // Report whichever failing column comes first; up before down on ties.
  if (up.failure && (!down.failure || (*up.failure)[0] <= (*down.failure)[0])) {
    const auto& f = *up.failure;
    return AxiomCheck::fail("x -> x^a is not a permutation", {f[0], f[1], f[2]});
  }
  if (down.failure) {
    const auto& f = *down.failure;
    return AxiomCheck::fail("x -> x_a is not a permutation", {f[0], f[1], f[2]});
  }
  return AxiomCheck::pass();
}

/// Checks the two diagonal biquandle identities for every a, with
/// d = (f_a)^{-1}(a):
///   (B1) (f^a)^{-1}(a) == a_d
///   (B2) d == a^d
/// Requires a birack; a non-birack fails with the birack witness.
inline AxiomCheck verify_biquandle(const OperationTables& t) {
  if (auto birack = verify_birack(t); !birack) return birack;
  const std::size_t n = t.n;
  const auto up_inv = detail::invert_columns(n, t.up).inverse;
  const auto down_inv = detail::invert_columns(n, t.down).inverse;
  for (Element a = 0; a < n; ++a) {
    const Element d = down_inv[a * n + a];
    if (up_inv[a * n + a] != t.down_at(a, d)) {
      return AxiomCheck::fail("biquandle identity a^(a^-1) = a_(a_(a^-1)) fails", {a});
    }
    if (d != t.up_at(a, d)) {
      return AxiomCheck::fail("biquandle identity a_(a^-1) = a^(a_(a^-1)) fails", {a});
    }
  }
  return AxiomCheck::pass();
}

/// Operations read off the inverse switch, S^{-1}(a,b) = (b^{bar a}, a_{bar b}),
/// stored like the primary tables: `upbar[x*n+a] = x^{bar a}`,
/// `downbar[x*n+a] = x_{bar a}`. The `_inv` tables invert the maps
/// x -> x^{bar a} and x -> x_{bar a}; they are empty when those maps are not
/// bijective (which cannot happen for a birack).
struct BarTables {
  std::vector<Element> upbar;
  std::vector<Element> downbar;
  std::vector<Element> upbar_inv;
  std::vector<Element> downbar_inv;
};

/// Inverts the n^2-pair map S explicitly. Throws AxiomError when S is not a
/// bijection.
inline BarTables derive_bar_tables(const OperationTables& t) {
  t.validate_shape();
  const std::size_t n = t.n;
  const auto unset = static_cast<Element>(n);
  BarTables bars;
  bars.upbar.assign(n * n, unset);
  bars.downbar.assign(n * n, unset);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      // S(x,y) = (s,u), so S^{-1}(s,u) = (x,y) = (u^{bar s}, s_{bar u}).
      const Element s = t.down_at(y, x);
      const Element u = t.up_at(x, y);
      if (bars.upbar[u * n + s] != unset) {
        throw AxiomError("switch is not a bijection of pairs; no inverse exists");
      }
      bars.upbar[u * n + s] = x;
      bars.downbar[s * n + u] = y;
    }
  }
  if (auto inv = detail::invert_columns(n, bars.upbar); !inv.failure) {
    bars.upbar_inv = std::move(inv.inverse);
  }
  if (auto inv = detail::invert_columns(n, bars.downbar); !inv.failure) {
    bars.downbar_inv = std::move(inv.inverse);
  }
  return bars;
}

/// A finite switch together with everything derived from it: row inverses of
/// the up and down maps (birack and above) and the four bar tables.
///
/// Instances are immutable and only produced by `build`, which runs the
/// verifiers; the recorded level is the highest one that verified.
class FiniteBiquandle {
 public:
  /// Verifies `tables` and fails with AxiomError (naming the failed axiom and
  /// witness) unless at least `required` holds.
  static FiniteBiquandle build(OperationTables tables, Level required = Level::Switch,
                               ParallelOptions parallel = {}) {
    FiniteBiquandle b;
    b.switch_check_ = verify_switch(tables, parallel);
    if (b.switch_check_) {
      b.level_ = Level::Switch;
      b.birack_check_ = verify_birack(tables);
      if (b.birack_check_) {
        b.level_ = Level::Birack;
        b.biquandle_check_ = verify_biquandle(tables);
        if (b.biquandle_check_) b.level_ = Level::Biquandle;
      }
    }
    if (b.level_ < required) {
      const AxiomCheck& failed = !b.switch_check_   ? b.switch_check_
                                 : !b.birack_check_ ? b.birack_check_
                                                    : b.biquandle_check_;
      throw AxiomError("not a " + std::string(to_string(required)) + ": " +
                       failed.describe(tables.names));
    }
    if (b.level_ >= Level::Switch) b.bars_ = derive_bar_tables(tables);
    if (b.level_ >= Level::Birack) {
      b.up_inv_ = detail::invert_columns(tables.n, tables.up).inverse;
      b.down_inv_ = detail::invert_columns(tables.n, tables.down).inverse;
      if (b.bars_.upbar_inv.empty() || b.bars_.downbar_inv.empty()) {
        throw InternalError("bar operations of a birack must be bijective");
      }
    }
    b.tables_ = std::move(tables);
    return b;
  }

  std::size_t size() const noexcept { return tables_.n; }
  Level level() const noexcept { return level_; }
  const OperationTables& tables() const noexcept { return tables_; }

  const AxiomCheck& switch_check() const noexcept { return switch_check_; }
  const AxiomCheck& birack_check() const noexcept { return birack_check_; }
  const AxiomCheck& biquandle_check() const noexcept { return biquandle_check_; }

  /// a^b
  Element up(Element a, Element b) const { return tables_.up[a * tables_.n + b]; }
  /// a_b
  Element down(Element a, Element b) const { return tables_.down[a * tables_.n + b]; }
  /// (f^b)^{-1}(a); birack only.
  Element up_inv(Element a, Element b) const { return up_inv_[a * tables_.n + b]; }
  /// (f_b)^{-1}(a); birack only.
  Element down_inv(Element a, Element b) const { return down_inv_[a * tables_.n + b]; }
  Element upbar(Element a, Element b) const { return bars_.upbar[a * tables_.n + b]; }
  Element downbar(Element a, Element b) const { return bars_.downbar[a * tables_.n + b]; }
  Element upbar_inv(Element a, Element b) const { return bars_.upbar_inv[a * tables_.n + b]; }
  Element downbar_inv(Element a, Element b) const {
    return bars_.downbar_inv[a * tables_.n + b];
  }

  /// S(a,b) = (b_a, a^b)
  std::pair<Element, Element> apply_switch(Element a, Element b) const {
    return {down(b, a), up(a, b)};
  }
  /// S^{-1}(a,b) = (b^{bar a}, a_{bar b})
  std::pair<Element, Element> apply_inverse_switch(Element a, Element b) const {
    return {upbar(b, a), downbar(a, b)};
  }

  std::string name(Element a) const { return tables_.name(a); }

  /// Resolves a display name, or a bare index when no names are stored.
  std::optional<Element> find(std::string_view text) const {
    if (!tables_.names.empty()) {
      for (std::size_t i = 0; i < tables_.names.size(); ++i) {
        if (tables_.names[i] == text) return static_cast<Element>(i);
      }
    }
    Element value = 0;
    if (text.empty()) return std::nullopt;
    for (char c : text) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + static_cast<Element>(c - '0');
      if (value >= tables_.n) return std::nullopt;
    }
    return value;
  }

 private:
  FiniteBiquandle() = default;

  OperationTables tables_;
  Level level_ = Level::None;
  AxiomCheck switch_check_;
  AxiomCheck birack_check_ = AxiomCheck::fail("not checked", {});
  AxiomCheck biquandle_check_ = AxiomCheck::fail("not checked", {});
  std::vector<Element> up_inv_;
  std::vector<Element> down_inv_;
  BarTables bars_;
};

// ---------------------------------------------------------------------------
// Constructors

/// Tables of the Wada switch S(g,h) = (g h^-1 g^-1, g h^2):
/// g^h = g h^2 and h_g = g h^-1 g^-1.
inline OperationTables wada_tables(const FiniteGroup& g) {
  const std::size_t n = g.order();
  OperationTables t{n, std::vector<Element>(n * n), std::vector<Element>(n * n), g.names()};
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      t.up[a * n + b] = g.mul(a, g.mul(b, b));
      t.down[a * n + b] = g.mul(g.mul(b, g.inv(a)), g.inv(b));
    }
  }
  return t;
}

/// The Wada biquandle of a finite group. All three verifiers run; a failure
/// is reported as InternalError since the Wada switch always is a biquandle.
inline FiniteBiquandle wada_biquandle(const FiniteGroup& g, ParallelOptions parallel = {}) {
  try {
    return FiniteBiquandle::build(wada_tables(g), Level::Biquandle, parallel);
  } catch (const AxiomError& e) {
    throw InternalError(std::string("Wada switch failed verification: ") + e.what());
  }
}

namespace detail {

inline std::size_t residue(long long value, std::size_t n) {
  const auto m = static_cast<long long>(n);
  return static_cast<std::size_t>(((value % m) + m) % m);
}

}  // namespace detail

/// Tables of the Alexander switch S(a,b) = (mu b, lambda a + (1 - mu lambda) b)
/// on Z/n: a_b = mu a and a^b = lambda a + (1 - mu lambda) b.
inline OperationTables alexander_tables(std::size_t n, long long lambda, long long mu) {
  if (n < 1) throw ArgumentError("modulus must be positive");
  const std::size_t l = detail::residue(lambda, n);
  const std::size_t m = detail::residue(mu, n);
  if (auto g = std::gcd(l, n); g != 1) {
    throw ArgumentError("lambda not invertible mod " + std::to_string(n) + " (gcd " +
                        std::to_string(g) + ")");
  }
  if (auto g = std::gcd(m, n); g != 1) {
    throw ArgumentError("mu not invertible mod " + std::to_string(n) + " (gcd " +
                        std::to_string(g) + ")");
  }
  const std::size_t c = detail::residue(1 - static_cast<long long>(m * l % n), n);
  OperationTables t{n, std::vector<Element>(n * n), std::vector<Element>(n * n), {}};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.up[a * n + b] = static_cast<Element>((l * a + c * b) % n);
      t.down[a * n + b] = static_cast<Element>((m * a) % n);
    }
  }
  return t;
}

inline FiniteBiquandle alexander_biquandle(std::size_t n, long long lambda, long long mu,
                                           ParallelOptions parallel = {}) {
  try {
    return FiniteBiquandle::build(alexander_tables(n, lambda, mu), Level::Biquandle, parallel);
  } catch (const AxiomError& e) {
    throw InternalError(std::string("Alexander switch failed verification: ") + e.what());
  }
}

/// Checks the rack axioms on `rack[a*n+b] = a*b`: every right action
/// x -> x*a is a bijection, and (a*b)*c = (a*c)*(b*c).
inline AxiomCheck verify_rack(std::size_t n, const std::vector<Element>& rack) {
  if (n == 0 || rack.size() != n * n) throw TableFormatError("rack table must have n*n entries");
  for (Element e : rack) {
    if (e >= n) throw TableFormatError("rack table entry out of range");
  }
  if (auto inv = detail::invert_columns(n, rack); inv.failure) {
    const auto& f = *inv.failure;
    return AxiomCheck::fail("right action x -> x*a is not a bijection", {f[0], f[1], f[2]});
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        const Element lhs = rack[rack[a * n + b] * n + c];
        const Element rhs = rack[rack[a * n + c] * n + rack[b * n + c]];
        if (lhs != rhs) return AxiomCheck::fail("self-distributivity fails", {a, b, c});
      }
    }
  }
  return AxiomCheck::pass();
}

/// The rack switch S(a,b) = (b, a*b): a^b = a*b and a_b = a. The result is
/// at least a birack; it is a biquandle exactly when the rack is a quandle.
inline FiniteBiquandle rack_switch(std::size_t n, const std::vector<Element>& rack,
                                   std::vector<std::string> names = {}) {
  if (auto check = verify_rack(n, rack); !check) {
    throw AxiomError("not a rack: " + check.describe(names));
  }
  OperationTables t{n, rack, std::vector<Element>(n * n), std::move(names)};
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) t.down[a * n + b] = a;
  }
  return FiniteBiquandle::build(std::move(t), Level::Birack);
}

/// S(a,b) = (b,a) on n points; every operation is trivial.
inline FiniteBiquandle swap_biquandle(std::size_t n) {
  std::vector<Element> trivial(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) trivial[a * n + b] = a;
  }
  return rack_switch(n, trivial);
}

}  // namespace bqlong
