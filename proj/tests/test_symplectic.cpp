#include "doctest.h"
#include "mcgkit/symplectic.hpp"

using namespace mcg;

TEST_SUITE("symplectic") {

TEST_CASE("pairing convention") {
    CHECK(pairing(HomologyClass::A(1, 1), HomologyClass::B(1, 1)) == 1);
    CHECK(pairing(HomologyClass::B(1, 1), HomologyClass::A(1, 1)) == -1);
    CHECK(pairing(HomologyClass::A(2, 1), HomologyClass::A(2, 2)) == 0);
    HomologyClass u(1, {1, 0}), v(1, {2, 1});
    CHECK(abs(pairing(u, v)) == 1);
}

TEST_CASE("transvections") {
    CHECK(transvection(HomologyClass(2)).is_identity());
    // x + <x, c> c with <B_1, A_1> = -1
    CHECK(transvection(HomologyClass::A(1, 1)) * HomologyClass::B(1, 1) ==
          HomologyClass::B(1, 1) - HomologyClass::A(1, 1));
    HomologyClass c(2, {1, -1, 0, 1});
    SympMatrix t = transvection(c);
    CHECK(is_symplectic(t));
    CHECK_FALSE((t * t).is_identity());
    CHECK(t * t == transvection_power(c, 2));
    CHECK(transvection_power(c, -1) * t == SympMatrix(2));
}

TEST_CASE("big exponents stay exact") {
    HomologyClass c = HomologyClass::A(1, 1);
    SympMatrix m = transvection_power(c, 4'000'000'000'000'000'000LL);
    CHECK(m * transvection_power(c, -4'000'000'000'000'000'000LL) == SympMatrix(1));
    SympMatrix sq = m * m;
    CHECK(sq.at(0, 1) == BigInt(-8) * BigInt(1'000'000'000'000'000'000LL));
}

TEST_CASE("symplectic test") {
    CHECK(is_symplectic(SympMatrix(3)));
    SympMatrix d(2);
    d.at(0, 0) = 2;
    CHECK_FALSE(is_symplectic(d));
    CHECK(is_symplectic(standard_form(2)));
}

}  // TEST_SUITE
