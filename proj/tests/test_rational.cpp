#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motionfact/errors.hpp"
#include "motionfact/rational.hpp"
#include "support/generators.hpp"

using namespace motionfact;

TEST_CASE("literal format round trip") {
    CHECK(rat_to_string(rat_from_string("3/4")) == "3/4");
    CHECK(rat_to_string(rat_from_string("-7/2")) == "-7/2");
    CHECK(rat_to_string(rat_from_string("5")) == "5");
    CHECK(rat_to_string(rat_from_string("6/4")) == "3/2"); // lowest terms
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rat_from_string("1/-2"), ParseError);
    CHECK_THROWS_AS(rat_from_string("a"), ParseError);
    CHECK_THROWS_AS(rat_from_string(""), ParseError);
}

TEST_CASE("arithmetic is exact: two evaluation routes agree bit for bit") {
    testing::Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const Rat a = rng.rat(50, 30), b = rng.rat(50, 30), c = rng.nonzero_rat(50, 30);
        // (a + b) / c computed two ways
        const Rat r1 = (a + b) / c;
        const Rat r2 = a / c + b / c;
        CHECK(r1 == r2);
        CHECK(rat_to_string(r1) == rat_to_string(r2));
        // normalization invariants
        CHECK(denominator(r1) > 0);
        CHECK(gcd(numerator(r1), denominator(r1)) == 1);
    }
}

TEST_CASE("square detection") {
    Rat root;
    CHECK(rat_is_square(Rat(9, 16), &root));
    CHECK(root == Rat(3, 4));
    CHECK(rat_is_square(Rat(0), &root));
    CHECK(root == 0);
    CHECK_FALSE(rat_is_square(Rat(2)));
    CHECK_FALSE(rat_is_square(Rat(-4)));
    CHECK_FALSE(rat_is_square(Rat(9, 17)));
}

TEST_CASE("decimal rendering") {
    CHECK(rat_to_decimal(Rat(1, 4), 3) == "0.250");
    CHECK(rat_to_decimal(Rat(-3, 2), 2) == "-1.50");
    CHECK(rat_to_decimal(Rat(2, 3), 4) == "0.6667");
    CHECK(rat_to_decimal(Rat(1), 0) == "1");
}

TEST_CASE("double round trip is exact for binary rationals") {
    testing::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const double x = rng.int_in(-1000, 1000) / 64.0;
        CHECK(rat_to_double(rat_from_double(x)) == x);
    }
    CHECK(rat_from_double(0.5) == Rat(1, 2));
    CHECK(rat_from_double(-0.75) == Rat(-3, 4));
}

TEST_CASE("continued fraction reconstruction recovers small denominators") {
    testing::Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const Rat target(rng.int_in(-500, 500), rng.int_in(1, 97));
        // perturb far below the 1/(2 q^2) recovery threshold
        const Rat noisy = target + Rat(1, Int(1) << 40);
        CHECK(reconstruct_rational(noisy, Int(1000)) == target);
    }
}
