#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "wordspace/bigmath.hpp"

using namespace wordspace;

TEST_CASE("floor_rat") {
    CHECK(floor_rat(BigRat(7, 2)) == 3);
    CHECK(floor_rat(BigRat(6, 2)) == 3);
    CHECK(floor_rat(BigRat(-7, 2)) == -4);
    CHECK(floor_rat(BigRat(0)) == 0);
    CHECK(floor_rat(BigRat(1366450, 7)) == 195207);
}

TEST_CASE("pow helpers") {
    CHECK(pow_int(BigInt(10), 3) == 1000);
    CHECK(pow_int(BigInt(2), 0) == 1);
    CHECK(pow_int(BigInt(0), 0) == 1);
    CHECK(pow_rat(BigRat(1, 2), 3) == BigRat(1, 8));
    CHECK(pow_rat(BigRat(3, 7), 0) == 1);
    CHECK(pow_int(BigInt(218632), 8) ==
          BigInt("5220472604652593201650712092301430070706176"));
}

TEST_CASE("log2_int") {
    CHECK(log2_int(BigInt(1)) == doctest::Approx(0.0));
    CHECK(log2_int(BigInt(1024)) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(log2_int(BigInt(195207)) == doctest::Approx(17.574645262400185).epsilon(1e-9));
    CHECK_THROWS_AS(log2_int(BigInt(0)), std::domain_error);

    // additivity across the 64-bit boundary
    std::mt19937_64 gen(7);
    for (int i = 0; i < 50; ++i) {
        const BigInt a = BigInt(gen() | 1);
        const BigInt b = pow_int(BigInt(gen() | 1), 3);
        CHECK(log2_int(a * b) == doctest::Approx(log2_int(a) + log2_int(b)).epsilon(1e-12));
    }
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("2919/8225") == BigRat(2919, 8225));
    CHECK(parse_rational("0.35") == BigRat(7, 20));
    CHECK(parse_rational("1") == 1);
    CHECK(parse_rational("-0.5") == BigRat(-1, 2));
    CHECK(parse_rational(".5") == BigRat(1, 2));
    CHECK(parse_rational("1.5") == BigRat(3, 2));
    CHECK(parse_rational("+3/4") == BigRat(3, 4));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
}

TEST_CASE("rat_to_double handles huge ratios") {
    CHECK(rat_to_double(BigRat(1, 2)) == doctest::Approx(0.5));
    CHECK(rat_to_double(BigRat(0)) == 0.0);
    CHECK(rat_to_double(BigRat(-3, 4)) == doctest::Approx(-0.75));
    const BigRat huge(pow_int(BigInt(10), 400), pow_int(BigInt(10), 399));
    CHECK(rat_to_double(huge) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("rat_to_string") {
    CHECK(rat_to_string(BigRat(98, 175)) == "14/25");  // canonical form
    CHECK(rat_to_string(BigRat(7)) == "7");
    CHECK(rat_to_string(BigRat(-1, 3)) == "-1/3");
}
