#include "taut/rational.hpp"

#include <doctest.h>

#include <random>

using taut::Integer;
using taut::Rational;

TEST_CASE("construction reduces and normalizes sign") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).is_zero());
}

TEST_CASE("zero denominator and division by zero throw") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("string form") {
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-1, 24).str() == "-1/24");
    CHECK(Rational(22, 11).str() == "2");
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(5, 3) > Rational(3, 2));
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 40);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a / a == Rational(1));
        CHECK(a - b == a + (-b));
    }
}

TEST_CASE("large exact values stay exact") {
    Rational big(Integer("123456789123456789123456789"), Integer("987654321987654321"));
    CHECK(big * Rational(Integer("987654321987654321"), Integer(1)) ==
          Rational(Integer("123456789123456789123456789")));
}
