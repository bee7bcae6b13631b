#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "racah/rat.hpp"

using namespace racah;

TEST_CASE("rat helper canonicalizes") {
  CHECK(rat(-4, 2) == Rat(-2));
  CHECK(rat(6, -4) == rat(-3, 2));
  CHECK(rat(0, 7) == Rat(0));
  CHECK(to_string(rat(-4, 2)) == "-2");
}

TEST_CASE("to_string format") {
  CHECK(to_string(Rat(5)) == "5");
  CHECK(to_string(rat(-3, 4)) == "-3/4");
  CHECK(to_string(Rat(0)) == "0");
  CHECK(to_string(rat(1, 2)) == "1/2");
}

TEST_CASE("parse_rat round-trip and validation") {
  for (const char* s : {"0", "5", "-3/4", "1/2", "-17", "22/7"}) {
    Rat x = parse_rat(s);
    CHECK(to_string(x) == s);
  }
  CHECK(parse_rat("-6/4") == rat(-3, 2));  // canonicalized on input
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
}

TEST_CASE("is_integer") {
  CHECK(is_integer(Rat(7)));
  CHECK(is_integer(Rat(0)));
  CHECK(is_integer(Rat(-3)));
  CHECK_FALSE(is_integer(rat(1, 2)));
  CHECK_FALSE(is_integer(rat(-7, 3)));
}

TEST_CASE("rational_sqrt") {
  Rat r;
  CHECK(rational_sqrt(rat(25, 16), &r));
  CHECK(r == rat(5, 4));
  CHECK(rational_sqrt(Rat(0), &r));
  CHECK(r == 0);
  CHECK(rational_sqrt(Rat(1), &r));
  CHECK(r == 1);
  CHECK_FALSE(rational_sqrt(Rat(2), &r));
  CHECK_FALSE(rational_sqrt(rat(1, 3), &r));
  CHECK_FALSE(rational_sqrt(Rat(-4), &r));
}

TEST_CASE("pochhammer values") {
  CHECK(pochhammer(rat(7, 3), 0) == 1);  // empty product
  CHECK(pochhammer(Rat(3), 2) == 12);    // 3*4
  CHECK(pochhammer(rat(1, 2), 3) == rat(15, 8));  // (1/2)(3/2)(5/2)
  CHECK(pochhammer(Rat(-2), 3) == 0);    // hits zero factor
}

TEST_CASE("pochhammer recurrence") {
  for (long num : {-5L, -1L, 0L, 1L, 3L}) {
    for (long den : {1L, 2L, 3L}) {
      Rat x = rat(num, den);
      for (unsigned n = 1; n <= 6; ++n)
        CHECK(pochhammer(x, n) == pochhammer(x, n - 1) * (x + (long)n - 1));
    }
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(6, 6) == 1);
  CHECK(binomial(10, 3) == 120);
}
