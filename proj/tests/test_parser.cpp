#include <chw/parser.hpp>

#include <doctest.h>

#include "support.hpp"

using namespace chw;

namespace {

GroupElement E(std::size_t n, std::vector<Gen> w, LatticeVector z) {
  return GroupElement(ReducedWord(n, std::move(w)), std::move(z));
}

std::size_t error_position(std::string_view text, std::size_t n) {
  try {
    parse_word(text, n);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parse_word examples") {
  CHECK(parse_element("x1^-1 x2^2 x1 x2^2", 2).is_identity());
  CHECK(parse_element("(x1 x2)^2", 3) == E(3, {1, 2, 1, 2}, {0, 0, 0}));
  CHECK(parse_element("x1^3", 2) == E(2, {1}, {1, 0}));
  CHECK(parse_element("x1x2", 2) == E(2, {1, 2}, {0, 0}));
  CHECK(parse_element("((x1)^2 x2)^-1", 2) == E(2, {2}, {-1, -1}));
  CHECK(parse_element("; [3,-4]", 2) == E(2, {}, {3, -4}));
  CHECK(parse_element("x2 ; [1, 0]", 2) == E(2, {2}, {1, 0}));
}

TEST_CASE("parse tree") {
  const WordExpr e = parse_word("x1^-3 (x2 x1)^2", 2);
  REQUIRE(e.factors.size() == 2);
  CHECK(e.factors[0].generator == 1);
  CHECK(e.factors[0].exponent == -3);
  CHECK(e.factors[1].generator == 0);
  CHECK(e.factors[1].group.size() == 2);
  CHECK(e.factors[1].exponent == 2);
  CHECK_FALSE(e.shift.has_value());
}

TEST_CASE("parse_word errors carry positions") {
  CHECK(error_position("", 2) == 0);
  CHECK(error_position("x", 2) == 1);
  CHECK(error_position("x3", 2) == 1);
  CHECK(error_position("x1 y2", 2) == 3);
  CHECK(error_position("(x1", 2) == 3);
  CHECK(error_position("x1^", 2) == 3);
  CHECK(error_position("()", 2) == 0);
  CHECK(error_position("x1 ; [1]", 2) == 5);
  CHECK(error_position("x1 ; [1,2] x2", 2) == 11);
  CHECK_THROWS_AS(parse_element("(x1 x2)^1000000", 2), ResourceLimit);
  CHECK(parse_element("x1^1000000000000000000000", 2).shift()[0] == Integer("500000000000000000000"));
}

TEST_CASE("parse_autoword") {
  const AutoWord w = parse_autoword("a[1,2] d[3]", 3);
  REQUIRE(w.tokens.size() == 2);
  CHECK(std::holds_alternative<FrToken>(w.tokens[0].op));
  CHECK(std::get<FrToken>(w.tokens[0].op).i == 1);
  CHECK(std::get<DeltaToken>(w.tokens[1].op).i == 3);

  const AutoWord e = parse_autoword("e[1,2]^-2", 2);
  REQUIRE(e.tokens.size() == 1);
  CHECK(std::get<EpsToken>(e.tokens[0].op).exponent == -2);

  CHECK_THROWS_AS(parse_autoword("a[1,1]", 3), ParseError);
  CHECK_THROWS_AS(parse_autoword("a[1,2]^2", 3), ParseError);
  CHECK_THROWS_AS(parse_autoword("p[1,1,2]", 3), ParseError);
  CHECK_THROWS_AS(parse_autoword("p[1,2]", 3), ParseError);
  CHECK_THROWS_AS(parse_autoword("d[4]", 3), ParseError);
  CHECK_THROWS_AS(parse_autoword("a[1,2]d[3]", 3), ParseError);
  CHECK_THROWS_AS(parse_autoword("t[[1,0],[0,0]]", 2), ParseError);
  CHECK(parse_autoword("", 3).tokens.empty());

  const AutoWord inv = parse_autoword("a[2,1]' p[2,3,1]'", 3);
  CHECK(inv.tokens[0].inverse);
  CHECK(inv.tokens[1].inverse);
}

TEST_CASE("autoword text round trip") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 5));
    const AutoWord w = random_autoword(n, 5, rng);
    const AutoWord back = parse_autoword(to_string(w), n);
    CHECK(to_string(back) == to_string(w));
    CHECK(evaluate(back) == evaluate(w));
  }
}

TEST_CASE("property: format then parse round-trips") {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    const GroupElement g = testing::random_element(n, rng);
    CHECK(parse_element(to_string(g), n) == g);
  }
}

TEST_CASE("property: malformed input is rejected cleanly") {
  const std::vector<std::string> corpus{
      "x1^-1 x2^2 x1 x2^2", "(x1 x2)^2 ; [1,-2]", "x2 (x1 x2^-3)^4", "; [0,0]",
      "a[1,2] d[2]'",       "e[2,1]^-3 p[2,1]",   "t[[0,1],[2,-1]]'"};
  const std::string alphabet = "x12()^-;[], 'apedt0";
  std::mt19937_64 rng(73);
  std::size_t rejected = 0;
  for (const auto& s : corpus) {
    for (std::size_t cut = 0; cut <= s.size(); ++cut) {
      const std::string prefix = s.substr(0, cut);
      try {
        parse_element(prefix, 2);
      } catch (const std::invalid_argument&) {
        ++rejected;
      }
      try {
        parse_autoword(prefix, 2);
      } catch (const std::invalid_argument&) {
        ++rejected;
      }
    }
    for (int m = 0; m < 200; ++m) {
      std::string mutated = s;
      const auto pos =
          static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(s.size()) - 1));
      switch (testing::uniform(rng, 0, 2)) {
        case 0:
          mutated.erase(pos, 1);
          break;
        case 1:
          mutated.insert(pos, 1, alphabet[static_cast<std::size_t>(
                                     testing::uniform(rng, 0, static_cast<long>(alphabet.size()) - 1))]);
          break;
        default:
          mutated[pos] = alphabet[static_cast<std::size_t>(
              testing::uniform(rng, 0, static_cast<long>(alphabet.size()) - 1))];
          break;
      }
      // Either a value or a typed error; anything else escapes the test.
      try {
        parse_element(mutated, 2);
      } catch (const std::invalid_argument&) {
        ++rejected;
      } catch (const ResourceLimit&) {
        ++rejected;
      }
      try {
        evaluate(parse_autoword(mutated, 2));
      } catch (const std::invalid_argument&) {
        ++rejected;
      }
    }
  }
  CHECK(rejected > 100);
}
