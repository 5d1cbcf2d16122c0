#include <random>

#include "doctest.h"
#include "mcgkit/autfree.hpp"
#include "mcgkit/verifier.hpp"
#include "oracles.hpp"

using namespace mcg;

namespace {

std::vector<long long> coeffs(const HomologyClass& c) {
    std::vector<long long> v;
    for (const auto& x : c.coeffs) v.push_back(static_cast<long long>(x));
    return v;
}

// Braided pairs of the (M1) rule text: consecutive chain letters, plus (b2, a2).
bool braided(const std::string& x, const std::string& y, const Alphabet& a) {
    if (x == "b2" || y == "b2") return x == "a2" || y == "a2";
    std::size_t i = a.find(x), j = a.find(y);
    return (i > j ? i - j : j - i) == 1;
}

Word random_mc_word(std::mt19937_64& rng, const Alphabet& a, std::size_t max_len) {
    return Word(oracle::random_letters(rng, a.rank(), max_len));
}

}  // namespace

TEST_SUITE("autfree") {

TEST_CASE("built-in tables validate at g = 1..4") {
    for (int g = 1; g <= 4; ++g) {
        CAPTURE(g);
        TwistTable t = load_twist_table(g);
        CHECK_NOTHROW(t.validate());
        CHECK(t.alphabet() == mc_alphabet(g));
    }
}

TEST_CASE("boundary word") {
    Alphabet a = pi1_alphabet(2);
    CHECK(render(boundary_word(1), pi1_alphabet(1)) == "x1 y1 x1' y1'");
    CHECK(boundary_word(2).size() == 8);
    Endo c = inner(2, boundary_word(2));
    CHECK(apply(c, parse_word("x1", a)) == conjugate(boundary_word(2), parse_word("x1", a)));
}

TEST_CASE("generators fix the boundary and abelianize to transvections") {
    for (int g = 1; g <= 4; ++g) {
        TwistTable t = load_twist_table(g);
        for (const auto& e : t.entries()) {
            CAPTURE(g);
            CAPTURE(e.label);
            CHECK(apply(e.forward, t.boundary()) == t.boundary());
            // column j of the abelianization is e_j + <e_j, c> c
            auto c = coeffs(e.cls);
            SympMatrix m = abelianize(e.forward);
            for (std::size_t j = 0; j < m.dim(); ++j) {
                std::vector<long long> ej(m.dim());
                ej[j] = 1;
                long long k = oracle::pairing(ej, c);
                for (std::size_t r = 0; r < m.dim(); ++r) CHECK(m.at(r, j) == ej[r] + k * c[r]);
            }
        }
    }
}

TEST_CASE("classes meet as the (M1) rule text says") {
    for (int g = 1; g <= 4; ++g) {
        TwistTable t = load_twist_table(g);
        const Alphabet& a = t.alphabet();
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = i + 1; j < a.rank(); ++j) {
                long long p = oracle::pairing(coeffs(t.entry(i).cls), coeffs(t.entry(j).cls));
                CAPTURE(a.name(i));
                CAPTURE(a.name(j));
                CHECK(std::llabs(p) == (braided(a.name(i), a.name(j), a) ? 1 : 0));
            }
    }
}

TEST_CASE("braid and commutation laws at the automorphism level") {
    TwistTable t = load_twist_table(3);
    const Alphabet& a = t.alphabet();
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = i + 1; j < a.rank(); ++j) {
            Word x{make_letter(i, 1)}, y{make_letter(j, 1)};
            CAPTURE(a.name(i));
            CAPTURE(a.name(j));
            if (braided(a.name(i), a.name(j), a))
                CHECK(t.evaluate(concat(concat(x, y), x)) == t.evaluate(concat(concat(y, x), y)));
            else
                CHECK(t.evaluate(concat(x, y)) == t.evaluate(concat(y, x)));
        }
}

TEST_CASE("composition, inversion and equality") {
    TwistTable t = load_twist_table(2);
    const Endo& ta1 = t.entry("a1").forward;
    Endo ta1inv = invert_generator(t.entry("a1"));
    CHECK(compose(ta1, Endo::identity(2)) == ta1);
    CHECK(compose(ta1, ta1inv).is_identity());
    CHECK(apply(Endo::identity(2), boundary_word(2)) == boundary_word(2));
    CHECK(apply(ta1, Word{}).empty());
    CHECK_FALSE(equal(ta1, t.entry("a2").forward));
    CHECK(invert_generator(TwistEntry{"id", Endo::identity(2), Endo::identity(2), HomologyClass(2)}).is_identity());

    Alphabet mc = t.alphabet();
    CHECK(t.evaluate(parse_word("a1 a1'", mc)).is_identity());
    CHECK(t.evaluate(Word{}).is_identity());
    CHECK(equal(t.evaluate(parse_word("(b1 a1 e1 a2)^5", mc)),
                t.evaluate(parse_word("b2 a2 e1 a1 b1^2 a1 e1 a2 b2", mc))));
}

TEST_CASE("two-chain power is conjugation by the boundary") {
    TwistTable t = load_twist_table(1);
    Endo lhs = t.evaluate(parse_word("(b1 a1)^6", t.alphabet()));
    CHECK(lhs == inner(1, power(boundary_word(1), kBoundarySign)));
}

TEST_CASE("random round trips and functoriality") {
    std::mt19937_64 rng(1234);
    for (int g : {2, 3}) {
        TwistTable t = load_twist_table(g);
        for (int n = 0; n < 500; ++n) {
            Word u = random_mc_word(rng, t.alphabet(), 20);
            Word v = random_mc_word(rng, t.alphabet(), 20);
            Endo fu = t.evaluate(u), fv = t.evaluate(v);
            REQUIRE(compose(fu, t.evaluate(invert(u))).is_identity());
            REQUIRE(abelianize(compose(fu, fv)) == abelianize(fu) * abelianize(fv));
            REQUIRE(compose(fu, fv) == t.evaluate(concat(u, v)));
            REQUIRE(apply(fu, t.boundary()) == t.boundary());
            REQUIRE(sp_of_word(t, u) == abelianize(fu));
        }
    }
}

TEST_CASE("validation rejects a broken table") {
    auto entries = derive_twists(1);
    for (auto& e : entries)
        if (e.label == "b1") {
            e.forward = Endo::identity(1);
            e.inverse = Endo::identity(1);
        }
    TwistTable bad(1, entries);
    try {
        bad.validate();
        FAIL("validation passed");
    } catch (const ValidationError& err) {
        CHECK(err.entry() == "b1");
        CHECK(err.check() == "V2");
    }
}

TEST_CASE("twist table file round trip") {
    for (int g = 1; g <= 3; ++g) {
        TwistTable t = load_twist_table(g);
        std::string text = format_twist_table(t);
        TwistTable back = parse_twist_table(g, text);
        CHECK_NOTHROW(back.validate());
        CHECK(format_twist_table(back) == text);
        for (std::size_t i = 0; i < t.entries().size(); ++i) CHECK(back.entry(i).forward == t.entry(i).forward);
    }
}

}  // TEST_SUITE
