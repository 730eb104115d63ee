#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include "inquiry/rational.hpp"

using inquiry::Rational;

TEST_CASE("rationals are stored canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(5, 1).num() == 5);
  CHECK(Rational(5, 1).den() == 1);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(-1, 2).abs() == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 3) >= Rational(2, 3));
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(1, 0), inquiry::invalid_input);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), inquiry::invalid_input);
  const Rational huge(INT64_MAX, 1);
  CHECK_THROWS_AS(huge + huge, std::overflow_error);
  CHECK_THROWS_AS(huge * Rational(2), std::overflow_error);
}

TEST_CASE("rational formatting and parsing") {
  CHECK(Rational(3, 5).str() == "3/5");
  CHECK(Rational(-3, 5).str() == "-3/5");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational::parse("3/5") == Rational(3, 5));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("1e-9") == Rational(1, 1000000000));
  CHECK_THROWS_AS(Rational::parse("abc"), inquiry::invalid_input);
  CHECK_THROWS_AS(Rational::parse("3/5x"), inquiry::invalid_input);
  CHECK_THROWS_AS(Rational::parse("3 / 5"), inquiry::invalid_input);
  CHECK_THROWS_AS(Rational::parse("0.25q"), inquiry::invalid_input);
}

TEST_CASE("rational field laws on random values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Rational a(static_cast<std::int64_t>(rng() % 2001) - 1000,
                     static_cast<std::int64_t>(rng() % 1000) + 1);
    const Rational b(static_cast<std::int64_t>(rng() % 2001) - 1000,
                     static_cast<std::int64_t>(rng() % 1000) + 1);
    const Rational c(static_cast<std::int64_t>(rng() % 2001) - 1000,
                     static_cast<std::int64_t>(rng() % 1000) + 1);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK(a * b / b == a);
  }
}
