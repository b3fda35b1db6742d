#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl2comod/base_ring.hpp"

using namespace sl2comod;

TEST_CASE("integers: membership and units") {
    const BaseRing z = BaseRing::integers();
    CHECK(z.contains(Rational(3)));
    CHECK(z.contains(Rational(0)));
    CHECK(z.contains(Rational(-17)));
    CHECK(z.contains(Rational(10) / 5));  // reduces to 2
    CHECK(!z.contains(Rational(1) / 2));
    CHECK(!z.contains(Rational(-3) / 7));

    CHECK(z.is_unit(Rational(1)));
    CHECK(z.is_unit(Rational(-1)));
    CHECK(!z.is_unit(Rational(0)));
    CHECK(!z.is_unit(Rational(2)));
    CHECK(!z.is_unit(Rational(1) / 2));
    CHECK(!z.is_field());
    CHECK(z.name() == "Z");
}

TEST_CASE("rationals: everything nonzero is a unit") {
    const BaseRing q = BaseRing::rationals();
    CHECK(q.contains(Rational(22) / 7));
    CHECK(q.is_unit(Rational(-3) / 5));
    CHECK(!q.is_unit(Rational(0)));
    CHECK(q.is_field());
    CHECK(q.name() == "Q");
}

TEST_CASE("localization at a prime: denominators prime to p") {
    const BaseRing z5 = BaseRing::localized_at_prime(5);
    CHECK(z5.contains(Rational(1) / 2));
    CHECK(z5.contains(Rational(7) / 4));
    CHECK(z5.contains(Rational(-11) / 3));
    CHECK(z5.contains(Rational(5)));
    CHECK(!z5.contains(Rational(1) / 5));
    CHECK(!z5.contains(Rational(2) / 15));

    CHECK(z5.is_unit(Rational(2) / 3));
    CHECK(z5.is_unit(Rational(-7)));
    CHECK(!z5.is_unit(Rational(5)));
    CHECK(!z5.is_unit(Rational(10) / 3));  // numerator divisible by 5
    CHECK(!z5.is_unit(Rational(0)));
    CHECK(z5.name() == "Z_(5)");
    CHECK(z5.parameter() == 5);

    CHECK_THROWS_AS(BaseRing::localized_at_prime(4), std::invalid_argument);
    CHECK_THROWS_AS(BaseRing::localized_at_prime(1), std::invalid_argument);
    CHECK_THROWS_AS(BaseRing::localized_at_prime(-3), std::invalid_argument);
}

TEST_CASE("inverted integer: denominators supported on the primes of m") {
    const BaseRing z6 = BaseRing::inverted_integer(6);
    CHECK(z6.contains(Rational(1) / 2));
    CHECK(z6.contains(Rational(1) / 3));
    CHECK(z6.contains(Rational(5) / 12));
    CHECK(z6.contains(Rational(-7) / 27));
    CHECK(!z6.contains(Rational(1) / 5));
    CHECK(!z6.contains(Rational(7) / 10));

    CHECK(z6.is_unit(Rational(2)));
    CHECK(z6.is_unit(Rational(3)));
    CHECK(z6.is_unit(Rational(4) / 9));
    CHECK(z6.is_unit(Rational(-6)));
    CHECK(!z6.is_unit(Rational(5)));
    CHECK(!z6.is_unit(Rational(10)));
    CHECK(!z6.is_unit(Rational(0)));
    CHECK(z6.name() == "Z[1/6]");

    // Z[1/4] has the same fraction set as Z[1/2].
    const BaseRing z4 = BaseRing::inverted_integer(4);
    CHECK(z4.contains(Rational(1) / 2));
    CHECK(z4.contains(Rational(1) / 8));
    CHECK(!z4.contains(Rational(1) / 3));

    CHECK_THROWS_AS(BaseRing::inverted_integer(1), std::invalid_argument);
    CHECK_THROWS_AS(BaseRing::inverted_integer(0), std::invalid_argument);
}

TEST_CASE("is_unit means: the element and its inverse both lie in the ring") {
    const BaseRing rings[] = {BaseRing::integers(), BaseRing::rationals(), BaseRing::localized_at_prime(3),
                              BaseRing::inverted_integer(10)};
    const Rational samples[] = {Rational(0),      Rational(1),      Rational(-1),    Rational(2),
                                Rational(1) / 2,  Rational(3) / 10, Rational(10) / 3, Rational(-9) / 4,
                                Rational(35) / 6, Rational(7)};
    for (const BaseRing& ring : rings)
        for (const Rational& q : samples) {
            const bool expected = q != 0 && ring.contains(q) && ring.contains(Rational(1) / q);
            CHECK(ring.is_unit(q) == expected);
        }
}

TEST_CASE("subring lattice of the localizations of Z") {
    const BaseRing z = BaseRing::integers();
    const BaseRing q = BaseRing::rationals();
    const BaseRing z2 = BaseRing::localized_at_prime(2);
    const BaseRing z3 = BaseRing::localized_at_prime(3);
    const BaseRing inv2 = BaseRing::inverted_integer(2);
    const BaseRing inv4 = BaseRing::inverted_integer(4);
    const BaseRing inv6 = BaseRing::inverted_integer(6);

    // Z sits inside everything; Q only inside itself.
    for (const BaseRing& r : {z, q, z2, z3, inv2, inv4, inv6}) {
        CHECK(z.subring_of(r));
        CHECK(q.subring_of(r) == (r == q));
        CHECK(r.subring_of(q));
        CHECK(r.subring_of(r));
    }

    // A local ring embeds only in itself and Q.
    CHECK(!z2.subring_of(z3));
    CHECK(!z2.subring_of(z));
    CHECK(!z2.subring_of(inv6));

    // Z[1/m] <= Z[1/m'] iff every prime of m divides m'.
    CHECK(inv2.subring_of(inv6));
    CHECK(!inv6.subring_of(inv2));
    CHECK(inv2.subring_of(inv4));
    CHECK(inv4.subring_of(inv2));
    CHECK(inv4 != inv2);  // equal fraction sets, distinct parameters

    // Z[1/m] <= Z_(p) iff p does not divide m.
    CHECK(inv2.subring_of(z3));
    CHECK(!inv2.subring_of(z2));
    CHECK(!inv6.subring_of(z2));
    CHECK(!inv6.subring_of(z3));
    CHECK(!inv2.subring_of(z));
}

TEST_CASE("primality test used by the localization constructor") {
    for (int p : {2, 3, 5, 7, 11, 13, 97, 101}) CHECK(BaseRing::is_prime(p));
    for (int n : {-2, 0, 1, 4, 6, 9, 15, 49, 121, 1001}) CHECK(!BaseRing::is_prime(n));
    CHECK(BaseRing::is_prime(Int("2147483647")));  // 2^31 - 1
}
