#include "thompson/words.hpp"

#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace thompson;
using thompson::testing::dy;
using thompson::testing::random_word;

TEST_CASE("parse") {
  Word w = parse_word("x0 x1^-1");
  REQUIRE(w.letters.size() == 2);
  CHECK(w.letters[0] == Letter{Letter::Base::X, 0, 1});
  CHECK(w.letters[1] == Letter{Letter::Base::X, 1, -1});

  Word v = parse_word("a^2 b a^-2");
  REQUIRE(v.letters.size() == 3);
  CHECK(v.letters[0] == Letter{Letter::Base::A, 0, 2});
  CHECK(v.letters[1] == Letter{Letter::Base::B, 0, 1});
  CHECK(v.letters[2] == Letter{Letter::Base::A, 0, -2});

  CHECK(parse_word("").letters.empty());
  CHECK(parse_word("a^0").letters.empty());
  CHECK(parse_word("x12").letters[0].index == 12);

  SUBCASE("errors carry a position") {
    CHECK_THROWS_AS(parse_word("x^2"), SyntaxError);
    try {
      parse_word("x0 x^2");
    } catch (const SyntaxError& e) {
      CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(parse_word("y0"), SyntaxError);
    CHECK_THROWS_AS(parse_word("a^"), SyntaxError);
    CHECK_THROWS_AS(parse_word("x0x1"), SyntaxError);
    CHECK_THROWS_AS(parse_word("a^99999999999999999999"), SyntaxError);
  }
}

TEST_CASE("str round trips") {
  for (const char* text : {"x0 x1^-1", "a^2 b a^-2", "x3^5", "b"}) {
    Word w = parse_word(text);
    CHECK(w.str() == text);
    CHECK(parse_word(w.str()) == w);
  }
}

TEST_CASE("generator maps") {
  CHECK(generator_map(0).str() == "0:0 1/2^2:1/2^1 1/2^1:3/2^2 1:1");
  CHECK(generator_map(1).str() == "0:0 1/2^1:1/2^1 5/2^3:3/2^2 3/2^2:7/2^3 1:1");
  CHECK(generator_map(2) == conjugate(generator_map(1), generator_map(0)));
  CHECK(support(generator_map(2)) == SupportSet::of(Interval(dy(3, 2), dy(1, 0))));
}

TEST_CASE("support of x_n shrinks toward 1") {
  Rational prev_lo(1, 2);
  for (long n = 2; n <= 6; ++n) {
    SupportSet s = support(generator_map(n));
    REQUIRE(s.size() == 1);
    CHECK(s.intervals[0].hi == Rational(1));
    CHECK(s.intervals[0].lo > prev_lo);
    prev_lo = s.intervals[0].lo;
  }
}

TEST_CASE("eval_word") {
  CHECK(support(eval_word(parse_word("b"))) == SupportSet::of(Interval(dy(1, 1), dy(7, 3))));
  CHECK(eval_word(parse_word("x1 x0^-1 x1^-1 x0")) == eval_word(parse_word("b")));
  CHECK(eval_word(Word{}) == PLMap::identity(unit_interval()));
  CHECK(eval_word(parse_word("a")) == compose(generator_map(0), generator_map(0)));
}

TEST_CASE("is_trivial") {
  CHECK(is_trivial(parse_word("x0 x0^-1")));
  CHECK(is_trivial(parse_word("b^-1 a^-3 b^-1 a^3 b a^-3 b a^3")));
  CHECK_FALSE(is_trivial(parse_word("x0")));
}

TEST_CASE("eval_word is a homomorphism") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> len(0, 8);
  for (int i = 0; i < 50; ++i) {
    Word u = random_word(rng, len(rng));
    Word v = random_word(rng, len(rng));
    CHECK(eval_word(u * v) == compose(eval_word(u), eval_word(v)));
    CHECK(eval_word(inverse(u)) == inverse(eval_word(u)));
  }
}
