#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "fubini/exact.hpp"

using namespace fubini;

TEST_CASE("ExactInt basics") {
  ExactInt a(12), b(-5);
  CHECK(a + b == ExactInt(7));
  CHECK(a * b == ExactInt(-60));
  CHECK((a - b).str() == "17");
  CHECK(ExactInt::pow(ExactInt(2), 100).str() == "1267650600228229401496703205376");
  CHECK(ExactInt("123456789012345678901234567890") * ExactInt(1) ==
        ExactInt("123456789012345678901234567890"));
  CHECK(div_exact(ExactInt(84), ExactInt(7)) == ExactInt(12));
  CHECK_THROWS_AS(div_exact(ExactInt(5), ExactInt(2)), std::domain_error);
  CHECK_THROWS_AS(div_exact(ExactInt(5), ExactInt(0)), std::domain_error);
  CHECK(ExactInt(-7).abs() == ExactInt(7));
  CHECK(ExactInt(0).sign() == 0);
  CHECK(ExactInt(-3).sign() == -1);
}

TEST_CASE("ExactRational canonical form") {
  ExactRational r(6, -8);
  CHECK(r.numerator() == ExactInt(-3));
  CHECK(r.denominator() == ExactInt(4));
  CHECK(r.str() == "-3/4");
  CHECK(ExactRational(0, 5) == ExactRational(0));
  CHECK(ExactRational(0).denominator() == ExactInt(1));
  CHECK(ExactRational("22/33").str() == "2/3");
  CHECK_THROWS_AS(ExactRational(ExactInt(1), ExactInt(0)), std::domain_error);
}

TEST_CASE("ExactRational arithmetic") {
  ExactRational a(1, 2), b(1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK_THROWS_AS(a / ExactRational(0), std::domain_error);
  CHECK(ExactRational(-3, 4).abs() == ExactRational(3, 4));
  CHECK(ExactRational::pow(ExactRational(-1, 2), 3) == ExactRational(-1, 8));
  CHECK(ExactRational::pow(ExactRational(5, 7), 0) == ExactRational(1));
  CHECK(ExactRational(3, 2).inverse() == ExactRational(2, 3));
  CHECK(a < ExactRational(2, 3));
  CHECK(ExactRational(7).is_integer());
  CHECK(ExactRational(7).to_int() == ExactInt(7));
  CHECK_THROWS_AS(ExactRational(1, 2).to_int(), std::domain_error);
}

TEST_CASE("integer str never prints a denominator") {
  CHECK(ExactRational(14, 7).str() == "2");
  CHECK(ExactRational(-14, 7).str() == "-2");
}
