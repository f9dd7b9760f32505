#pragma once

#include <vector>

#include "bqlong/biquandle.hpp"

// Identities every switch satisfies as a consequence of the Yang-Baxter
// relation. They are checked independently of `verify_switch`, which works on
// whole triples rather than on components.

namespace bqlong {

/// Third component of the relation: (a^b)^c == (a^{c_b})^{b^c}.
inline AxiomCheck check_up_interchange(const FiniteBiquandle& B) {
  const auto n = static_cast<Element>(B.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (B.up(B.up(a, b), c) != B.up(B.up(a, B.down(c, b)), B.up(b, c)))
          return AxiomCheck::fail("up interchange fails", {a, b, c});
  return AxiomCheck::pass();
}

/// First component: (a_b)_c == (a_{c^b})_{b_c}.
inline AxiomCheck check_down_interchange(const FiniteBiquandle& B) {
  const auto n = static_cast<Element>(B.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (B.down(B.down(a, b), c) != B.down(B.down(a, B.up(c, b)), B.down(b, c)))
          return AxiomCheck::fail("down interchange fails", {a, b, c});
  return AxiomCheck::pass();
}

/// Middle component: (a_b)^{c_{b^a}} == (a^c)_{b^{c_a}}.
inline AxiomCheck check_rule_of_five(const FiniteBiquandle& B) {
  const auto n = static_cast<Element>(B.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (B.up(B.down(a, b), B.down(c, B.up(b, a))) !=
            B.down(B.up(a, c), B.up(b, B.down(c, a))))
          return AxiomCheck::fail("rule of five fails", {a, b, c});
  return AxiomCheck::pass();
}

/// S(S^{-1}(a,b)) == (a,b) == S^{-1}(S(a,b)) for all pairs, and
/// componentwise with (x,y) = S^{-1}(a,b): y_x == a and x^y == b.
inline AxiomCheck check_partial_inverses(const FiniteBiquandle& B) {
  const auto n = static_cast<Element>(B.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const auto [x, y] = B.apply_inverse_switch(a, b);
      if (B.apply_switch(x, y) != std::pair{a, b})
        return AxiomCheck::fail("S(S^-1(a,b)) != (a,b)", {a, b});
      if (B.apply_inverse_switch(B.apply_switch(a, b).first, B.apply_switch(a, b).second) !=
          std::pair{a, b})
        return AxiomCheck::fail("S^-1(S(a,b)) != (a,b)", {a, b});
      if (B.down(y, x) != a || B.up(x, y) != b)
        return AxiomCheck::fail("partial inverse components fail", {a, b});
    }
  }
  return AxiomCheck::pass();
}

/// x -> x^{bar a} and x -> x_{bar a} are bijections, and their stored
/// inverses invert them. Birack only.
inline AxiomCheck check_bar_bijectivity(const FiniteBiquandle& B) {
  const auto n = static_cast<Element>(B.size());
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> up_seen(n, false), down_seen(n, false);
    for (Element x = 0; x < n; ++x) {
      const Element u = B.upbar(x, a);
      const Element d = B.downbar(x, a);
      if (up_seen[u] || B.upbar_inv(u, a) != x)
        return AxiomCheck::fail("x -> x^(bar a) is not a bijection", {a, x});
      if (down_seen[d] || B.downbar_inv(d, a) != x)
        return AxiomCheck::fail("x -> x_(bar a) is not a bijection", {a, x});
      up_seen[u] = down_seen[d] = true;
    }
  }
  return AxiomCheck::pass();
}

/// up_inv(x^a, a) == x and down_inv(x_a, a) == x. Birack only.
inline AxiomCheck check_row_inverses(const FiniteBiquandle& B) {
  const auto n = static_cast<Element>(B.size());
  for (Element x = 0; x < n; ++x)
    for (Element a = 0; a < n; ++a)
      if (B.up_inv(B.up(x, a), a) != x || B.down_inv(B.down(x, a), a) != x)
        return AxiomCheck::fail("row inverse mismatch", {x, a});
  return AxiomCheck::pass();
}

/// All of the above, in a fixed order.
inline std::vector<AxiomCheck> check_derived_identities(const FiniteBiquandle& B) {
  std::vector<AxiomCheck> checks{check_up_interchange(B), check_down_interchange(B),
                                 check_rule_of_five(B), check_partial_inverses(B)};
  if (B.level() >= Level::Birack) {
    checks.push_back(check_bar_bijectivity(B));
    checks.push_back(check_row_inverses(B));
  }
  return checks;
}

}  // namespace bqlong
