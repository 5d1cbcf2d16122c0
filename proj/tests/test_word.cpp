#include <random>

#include "doctest.h"
#include "mcgkit/word.hpp"
#include "oracles.hpp"

using namespace mcg;

namespace {

Alphabet xy() { return Alphabet({"x1", "y1", "x2", "y2"}); }
Word w(const char* text) { return parse_word(text, xy()); }

}  // namespace

TEST_SUITE("word") {

TEST_CASE("concat cancels at the junction") {
    CHECK(concat(w("x1"), w("x1'")).empty());
    CHECK(concat(w("x1 y1"), w("y1' x2")) == w("x1 x2"));
    CHECK(concat(w("x1 x2"), w("x2 x1")).size() == 4);
}

TEST_CASE("invert") {
    CHECK(invert(Word{}).empty());
    CHECK(render(invert(w("x1 y1")), xy()) == "y1' x1'");
    CHECK(invert(w("x1'")) == w("x1"));
}

TEST_CASE("conjugate and power") {
    CHECK(conjugate(Word{}, w("x1")) == w("x1"));
    CHECK(conjugate(w("x1"), w("x1")) == w("x1"));
    CHECK(render(conjugate(w("x1"), w("y1")), xy()) == "x1 y1 x1'");
    CHECK(power(w("x1"), 0).empty());
    CHECK(render(power(w("x1 y1"), 2), xy()) == "x1 y1 x1 y1");
    CHECK(render(power(w("x1"), -2), xy()) == "x1' x1'");
}

TEST_CASE("expression grammar") {
    Alphabet mc({"b2", "b1", "a1", "e1", "a2"});
    CHECK(parse_word("a1 a1^-1", mc).empty());
    CHECK(parse_word("(b1 a1 e1 a2)^5", mc).size() == 20);
    CHECK(render(parse_word("b1*a1", mc), mc) == "b1 a1 b1'");
    // exponent binds tighter than juxtaposition, conjugation loosest and left-associative
    CHECK(parse_word("b1 a1^2", mc) == parse_word("b1 a1 a1", mc));
    CHECK(parse_word("b1 * a1 * e1", mc) == parse_word("(b1 * a1) * e1", mc));
    CHECK(parse_word("b1 a1 * e1", mc) == parse_word("(b1 a1) * e1", mc));
    CHECK_THROWS_AS(parse_word("q9", mc), ParseError);
    CHECK_THROWS_AS(parse_word("(b1", mc), ParseError);
}

TEST_CASE("length guard") {
    set_max_word_length(10);
    CHECK_THROWS_AS(power(w("x1"), 11), WordLengthExceeded);
    CHECK(power(w("x1"), 10).size() == 10);
    set_max_word_length(1'000'000);
}

TEST_CASE("random group laws") {
    std::mt19937_64 rng(0x5eed);
    for (int n = 0; n < 100'000; ++n) {
        auto lu = oracle::random_letters(rng, 4, 12);
        auto lv = oracle::random_letters(rng, 4, 12);
        auto lx = oracle::random_letters(rng, 4, 12);
        Word u(lu), v(lv), x(lx);
        // reduction agrees with the naive oracle and is idempotent
        REQUIRE(u.letters() == oracle::naive_reduce(lu));
        REQUIRE(free_reduce(u.letters()) == u.letters());
        REQUIRE(concat(concat(u, v), x) == concat(u, concat(v, x)));
        REQUIRE(invert(invert(u)) == u);
        REQUIRE(concat(u, invert(u)).empty());
        REQUIRE((concat(u, v).size() % 2) == ((u.size() + v.size()) % 2));
        REQUIRE(parse_word(render(u, xy()), xy()) == u);
    }
}

}  // TEST_SUITE
