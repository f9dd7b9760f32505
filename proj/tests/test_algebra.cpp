#include <catch_amalgamated.hpp>

#include <array>
#include <set>
#include <tuple>
#include <sstream>

#include "bqlong/bqlong.hpp"

using namespace bqlong;

namespace {

// Alexander formulas without the invertibility guard, to build broken tables.
OperationTables raw_alexander(std::size_t n, std::size_t lambda, std::size_t mu) {
  OperationTables t{n, std::vector<Element>(n * n), std::vector<Element>(n * n), {}};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.down[a * n + b] = static_cast<Element>(mu * a % n);
      t.up[a * n + b] = static_cast<Element>((lambda * a + (n * n + 1 - mu * lambda % n) * b) % n);
    }
  }
  return t;
}

std::vector<Element> add_mod(std::size_t n, std::size_t shift) {
  std::vector<Element> rack(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rack[a * n + b] = static_cast<Element>((a + shift) % n);
  return rack;
}

std::vector<Element> dihedral(std::size_t n) {
  std::vector<Element> rack(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rack[a * n + b] = static_cast<Element>((2 * b + n - a) % n);
  return rack;
}

// (S x 1)(1 x S)(S x 1) == (1 x S)(S x 1)(1 x S) at one triple.
bool braid_holds(const OperationTables& t, Element a, Element b, Element c) {
  auto S = [&](Element x, Element y) { return std::pair{t.down_at(y, x), t.up_at(x, y)}; };
  using Triple = std::array<Element, 3>;
  auto s1 = [&](Triple v) {
    std::tie(v[0], v[1]) = S(v[0], v[1]);
    return v;
  };
  auto s2 = [&](Triple v) {
    std::tie(v[1], v[2]) = S(v[1], v[2]);
    return v;
  };
  const Triple v{a, b, c};
  return s1(s2(s1(v))) == s2(s1(s2(v)));
}

}  // namespace

TEST_CASE("permutation composition applies the left factor first") {
  const Permutation p = parse_cycles("(1 2)", 3);
  const Permutation q = parse_cycles("(2,3)", 3);
  // 1-based: (1 2)·(2 3) sends 3 to 2.
  CHECK((p * q)(2) == 1);
  CHECK((q * p)(2) == 0);
  CHECK(to_cycle_string(p * q) == "(1,3,2)");
}

TEST_CASE("cycle strings round trip") {
  for (const char* text : {"()", "(1,2)", "(1,2,3,4)", "(1,3,2,5,4)", "(1,2)(3,4)"}) {
    CHECK(to_cycle_string(parse_cycles(text, 5)) == text);
  }
  CHECK(to_cycle_string(parse_cycles("(2,3,4,1)", 5)) == "(1,2,3,4)");
  CHECK(to_cycle_string(parse_cycles(" ( 1 , 2 ) ", 4)) == "(1,2)");
  CHECK_THROWS_AS(parse_cycles("(1,1)", 3), ArgumentError);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), ArgumentError);
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), ArgumentError);
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), ArgumentError);
  CHECK_THROWS_AS(parse_cycles("1,2", 3), ArgumentError);
}

TEST_CASE("permutation inverse") {
  const Permutation p = parse_cycles("(1,3,2,5,4)", 5);
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), ArgumentError);
}

TEST_CASE("symmetric groups") {
  const FiniteGroup s3 = symmetric_group(3);
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);
  CHECK(s3.name(0) == "()");
  CHECK(symmetric_group(5).order() == 120);
  CHECK_THROWS_AS(symmetric_group(0), ArgumentError);

  // Group multiplication agrees with permutation composition.
  const auto& perms = s3.permutations();
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) CHECK(perms[s3.mul(a, b)] == perms[a] * perms[b]);

  const Element t12 = *s3.find("(1,2)");
  const Element t23 = *s3.find("(2 3)");
  CHECK(s3.name(s3.mul(t12, t23)) == "(1,3,2)");
  CHECK(s3.mul(t12, s3.inv(t12)) == s3.identity());
  CHECK(s3.power(s3.mul(t12, t23), 3) == s3.identity());
  CHECK(s3.power(t12, -1) == t12);
  CHECK_FALSE(s3.find("(1,4)"));
  CHECK_FALSE(s3.find("nonsense"));
}

TEST_CASE("group tables are validated") {
  CHECK(cyclic_group(5).mul(3, 4) == 2);
  // Z/2 with a broken row.
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1, 1}), ArgumentError);
  // Left-projection: associative but has no identity.
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 0, 1, 1}), ArgumentError);
}

TEST_CASE("Wada switch on Z/5") {
  const FiniteGroup z5 = cyclic_group(5);
  const OperationTables t = wada_tables(z5);
  CHECK(verify_switch(t));
  CHECK(verify_birack(t));
  CHECK(verify_biquandle(t));
  CHECK(t.up_at(1, 2) == 0);
  CHECK(t.down_at(2, 3) == 3);

  const FiniteBiquandle B = wada_biquandle(z5);
  CHECK(B.level() == Level::Biquandle);
  CHECK(B.up_inv(1, 1) == 4);
  CHECK(B.down_inv(1, 1) == 4);
  CHECK(B.down(1, 4) == 4);
  CHECK(B.up(1, 4) == 4);
  for (Element g = 0; g < 5; ++g) {
    for (Element h = 0; h < 5; ++h) {
      CHECK(B.upbar(h, g) == (2 * g + h) % 5);
      CHECK(B.downbar(g, h) == (5 - g) % 5);
    }
  }
}

TEST_CASE("Wada switch with the identity element") {
  const FiniteGroup s4 = symmetric_group(4);
  const OperationTables t = wada_tables(s4);
  const Element e = s4.identity();
  for (Element g = 0; g < s4.order(); ++g) {
    CHECK(t.up_at(g, e) == g);
    CHECK(t.down_at(e, g) == e);
  }
}

TEST_CASE("Wada switch on S3 and S5 is a biquandle") {
  CHECK(wada_biquandle(symmetric_group(3)).level() == Level::Biquandle);
  ParallelOptions par{0};
  const FiniteBiquandle s5 = wada_biquandle(symmetric_group(5), par);
  CHECK(s5.level() == Level::Biquandle);
  CHECK(s5.size() == 120);
}

TEST_CASE("Alexander switch") {
  const FiniteBiquandle B = alexander_biquandle(7, 2, 3);
  CHECK(B.apply_switch(1, 1) == std::pair<Element, Element>{3, 4});
  for (Element a = 0; a < 7; ++a) {
    for (Element b = 0; b < 7; ++b) {
      const auto [x, y] = B.apply_inverse_switch(a, b);
      CHECK(y == 5 * a % 7);
      CHECK(x == (4 * b + 2 * a) % 7);
    }
  }
  // Both B-identities hold in closed form: B1 sides are mu*a, B2 sides mu^-1*a.
  for (Element a = 0; a < 7; ++a) {
    const Element d = B.down_inv(a, a);
    CHECK(B.up_inv(a, a) == B.down(a, d));
    CHECK(B.up_inv(a, a) == 3 * a % 7);
    CHECK(d == B.up(a, d));
    CHECK(d == 5 * a % 7);
  }

  const FiniteBiquandle swap5 = alexander_biquandle(5, 1, 1);
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b) CHECK(swap5.apply_switch(a, b) == std::pair{b, a});

  CHECK_THROWS_WITH(alexander_tables(6, 2, 1), "lambda not invertible mod 6 (gcd 2)");
  CHECK_THROWS_AS(alexander_tables(6, 1, 3), ArgumentError);
  CHECK_THROWS_AS(alexander_tables(0, 1, 1), ArgumentError);
  // Negative parameters reduce mod n.
  CHECK(alexander_tables(7, -5, -4) == alexander_tables(7, 2, 3));
}

TEST_CASE("non-invertible mu breaks bijectivity of the switch") {
  const AxiomCheck check = verify_switch(raw_alexander(6, 1, 2));
  REQUIRE_FALSE(check);
  CHECK(check.axiom == "switch is not a bijection of pairs");
}

TEST_CASE("swap switch") {
  const FiniteBiquandle B = swap_biquandle(4);
  CHECK(B.level() == Level::Biquandle);
  for (Element x = 0; x < 4; ++x) {
    for (Element a = 0; a < 4; ++a) {
      CHECK(B.upbar(x, a) == x);
      CHECK(B.downbar(x, a) == x);
      CHECK(B.up_inv(x, a) == x);
    }
  }
}

TEST_CASE("birack check finds the constant column") {
  OperationTables t{3, std::vector<Element>(9, 0), {}, {}};
  t.down = add_mod(3, 0);
  const AxiomCheck check = verify_birack(t);
  REQUIRE_FALSE(check);
  CHECK(check.witness.at(0) == 0);
}

TEST_CASE("rack switches") {
  CHECK(rack_switch(3, dihedral(3)).level() == Level::Biquandle);
  CHECK(rack_switch(3, add_mod(3, 0)).level() == Level::Biquandle);

  const FiniteBiquandle shift = rack_switch(3, add_mod(3, 1));
  CHECK(shift.level() == Level::Birack);
  CHECK_FALSE(shift.biquandle_check());
  CHECK_FALSE(verify_biquandle(shift.tables()));

  // x*y = x^2 mod 3 is not a rack (column maps are not bijective).
  std::vector<Element> bad{0, 0, 0, 1, 1, 1, 1, 1, 1};
  CHECK_FALSE(verify_rack(3, bad));
  CHECK_THROWS_AS(rack_switch(3, bad), AxiomError);
}

TEST_CASE("build enforces the requested level") {
  const OperationTables shift = rack_switch(3, add_mod(3, 1)).tables();
  CHECK_NOTHROW(FiniteBiquandle::build(shift, Level::Birack));
  CHECK_THROWS_AS(FiniteBiquandle::build(shift, Level::Biquandle), AxiomError);
  CHECK_THROWS_AS(FiniteBiquandle::build(raw_alexander(6, 1, 2), Level::Switch), AxiomError);
  const FiniteBiquandle none = FiniteBiquandle::build(raw_alexander(6, 1, 2), Level::None);
  CHECK(none.level() == Level::None);
}

TEST_CASE("malformed tables are rejected") {
  OperationTables t = wada_tables(cyclic_group(3));
  t.up.pop_back();
  CHECK_THROWS_AS(verify_switch(t), TableFormatError);
  t = wada_tables(cyclic_group(3));
  t.down[4] = 3;
  CHECK_THROWS_AS(t.validate_shape(), TableFormatError);
}

TEST_CASE("a single swapped cell is localized") {
  // Swapping two entries of one column of `up` keeps S a bijection, so the
  // failure must come from the braid relation.
  const OperationTables good = wada_tables(symmetric_group(3));
  OperationTables t = good;
  std::swap(t.up[1 * 6 + 0], t.up[2 * 6 + 0]);
  const AxiomCheck check = verify_switch(t);
  REQUIRE_FALSE(check);
  CHECK(check.axiom == "Yang-Baxter relation fails");
  REQUIRE(check.witness.size() == 3);
  const auto [a, b, c] = std::tuple{check.witness[0], check.witness[1], check.witness[2]};
  CHECK_FALSE(braid_holds(t, a, b, c));
  CHECK(braid_holds(good, a, b, c));
}

TEST_CASE("parallel verification matches sequential, witness included") {
  OperationTables t = wada_tables(symmetric_group(4));
  std::swap(t.up[5 * 24 + 17], t.up[9 * 24 + 17]);
  const AxiomCheck reference = verify_switch(t);
  REQUIRE_FALSE(reference);
  for (unsigned threads : {2u, 3u, 8u, 0u}) {
    const AxiomCheck check = verify_switch(t, {threads});
    CHECK_FALSE(check);
    CHECK(check.witness == reference.witness);
  }
}

TEST_CASE("derived identities hold for sample biquandles") {
  const std::vector<FiniteBiquandle> samples{
      wada_biquandle(cyclic_group(5)), wada_biquandle(symmetric_group(3)),
      alexander_biquandle(5, 2, 3), alexander_biquandle(7, 2, 3), rack_switch(3, dihedral(3)),
      rack_switch(3, add_mod(3, 1))};
  for (const auto& B : samples) {
    for (const AxiomCheck& c : check_derived_identities(B)) {
      INFO(c.describe());
      CHECK(c);
    }
  }
}

TEST_CASE("table files round trip") {
  const OperationTables named = wada_tables(symmetric_group(3));
  CHECK(read_table(write_table(named)) == named);
  const OperationTables plain = alexander_tables(5, 2, 3);
  CHECK(read_table(write_table(plain)) == plain);

  std::string crlf;
  for (char c : write_table(plain)) {
    if (c == '\n') crlf += '\r';
    crlf += c;
  }
  CHECK(read_table(crlf) == plain);
}

TEST_CASE("table file errors carry line numbers") {
  const std::string good = write_table(alexander_tables(3, 1, 1));
  auto line_of = [](const std::string& text) {
    try {
      read_table(text);
    } catch (const TableFormatError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("biquandle v2\n") == 1);
  CHECK(line_of("biquandle v1\nn=x\n") == 2);
  CHECK(line_of("biquandle v1\nn=0\n") == 2);
  CHECK(line_of("biquandle v1\nn=2\nup:\n0 1\n") == 5);

  std::string out_of_range = good;
  out_of_range.replace(out_of_range.find("up:\n") + 4, 1, "7");
  CHECK(line_of(out_of_range) == 4);

  std::string short_row = good;
  short_row.replace(short_row.find("up:\n") + 4, 2, "");
  CHECK(line_of(short_row) == 4);

  CHECK(line_of(good + "extra\n") == 11);
  CHECK(line_of(good + "names:\n0 a\n1 b\n") == 14);
  CHECK(line_of(good + "names:\n0 a\n0 b\n2 c\n") == 13);
  CHECK(line_of(good) == 0);
}
