#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sptough/errors.hpp"
#include "sptough/rational.hpp"

using namespace sptough;

// ==================== CONSTRUCTION ====================

TEST_CASE("make_rational reduces to lowest terms") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(6, 9) == make_rational(2, 3));
    CHECK(make_rational(0, 7) == make_rational(0, 1));
    CHECK(make_rational(5, 5).num == 1);
    CHECK(make_rational(5, 5).den == 1);
}

TEST_CASE("make_rational rejects nonpositive denominators") {
    CHECK_THROWS_AS(make_rational(1, 0), domain_error);
    CHECK_THROWS_AS(make_rational(1, -2), domain_error);
}

// ==================== ORDERING ====================

TEST_CASE("comparison is exact") {
    CHECK(make_rational(1, 3) < make_rational(1, 2));
    CHECK(make_rational(2, 3) < make_rational(3, 4));
    CHECK_FALSE(make_rational(1, 2) < make_rational(1, 2));
    CHECK(make_rational(7, 8) < make_rational(1, 1));
    // values whose cross products overflow naive 32-bit arithmetic
    CHECK(make_rational(1000000000, 1000000001) < make_rational(1000000001, 1000000002));
}

// ==================== MEDIANT ====================

TEST_CASE("mediant lands strictly between distinct fractions") {
    rational a = make_rational(1, 2);
    rational b = make_rational(2, 3);
    rational m = mediant(a, b);
    CHECK(m == make_rational(3, 5));
    CHECK(a < m);
    CHECK(m < b);
}

TEST_CASE("mediant of equal fractions is the fraction") {
    CHECK(mediant(make_rational(2, 4), make_rational(3, 6)) == make_rational(1, 2));
}

// ==================== FORMATTING ====================

TEST_CASE("to_string hides unit denominators") {
    CHECK(to_string(make_rational(1, 2)) == "1/2");
    CHECK(to_string(make_rational(4, 4)) == "1");
    CHECK(to_string(make_rational(0, 3)) == "0");
}
