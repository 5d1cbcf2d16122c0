#include <algorithm>
#include <filesystem>

#include "doctest.h"
#include "mcgkit/rewrite.hpp"
#include "mcgkit/verifier.hpp"

using namespace mcg;

namespace {

std::vector<std::filesystem::path> shipped_scripts() {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(MCGKIT_SCRIPT_DIR))
        if (e.path().extension() == ".script") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

Word mc(const std::string& text, int g) { return parse_word(text, mc_alphabet(g)); }

// Every intermediate word acts on pi_1 like the first one.
void check_pi1_sound(const std::vector<Word>& trace, int g) {
    TwistTable t = load_twist_table(g);
    Endo first = t.evaluate(trace.front());
    for (std::size_t i = 1; i < trace.size(); ++i) {
        CAPTURE(i);
        CHECK(t.evaluate(trace[i]) == first);
    }
}

}  // namespace

TEST_SUITE("rewrite") {

TEST_CASE("rule sets from (M1)") {
    RuleSet r2 = RuleSet::from_M1(2);
    CHECK(r2.braided().size() == 4);
    CHECK(r2.commuting().size() == 6);
    CHECK(r2.has_rule("braid.b1.a1.1"));
    CHECK(r2.has_rule("braid.b1.a1.6"));
    CHECK(r2.has_rule("comm.b2.b1.--"));
    CHECK_FALSE(r2.has_rule("eq.M2"));
    CHECK(RuleSet::from_M1(2, true).has_rule("eq.M2"));
    CHECK(RuleSet::from_M1(3).braided().size() == 6);
}

TEST_CASE("every signed braid variant is sound") {
    RuleSet rs = RuleSet::from_M1(2);
    TwistTable t = load_twist_table(2);
    for (const auto& rule : rs.rules()) {
        CAPTURE(rule.id);
        CHECK(t.evaluate(Word(rule.lhs)) == t.evaluate(Word(rule.rhs)));
    }
}

TEST_CASE("single steps") {
    RuleSet rs = RuleSet::from_M1(3);
    CHECK(apply_step(mc("a1 b1 a1", 3), {"braid.b1.a1.1", 0, false}, rs) == mc("b1 a1 b1", 3));
    CHECK(apply_step(mc("a1 a3", 3), {"comm.a1.a3.++", 0, true}, rs) == mc("a3 a1", 3));
    CHECK(mc("a1 a1' b1", 3) == mc("b1", 3));
    // cancellation after a move is absorbed by the word invariant
    CHECK(apply_step(mc("a1 a3 a1'", 3), {"comm.a1.a3.++", 0, true}, rs) == mc("a3", 3));
    CHECK_THROWS(apply_step(mc("a1 a3", 3), {"comm.a1.a3.++", 1, true}, rs));
    CHECK_THROWS(apply_step(mc("a1 a3", 3), {"no.such.rule", 0, true}, rs));
}

TEST_CASE("replay") {
    RuleSet rs = RuleSet::from_M1(2);
    DerivationScript empty{2, mc("a1 b1", 2), {}, mc("a1 b1", 2), {}};
    CHECK(replay(empty, rs) == mc("a1 b1", 2));

    DerivationScript bad{2, mc("a1 b1", 2), {{"comm.b1.e1.++", 0, true}}, mc("a1 b1", 2), {}};
    try {
        replay(bad, rs);
        FAIL("bad step accepted");
    } catch (const StepError& e) {
        CHECK(e.index() == 1);
    }
    DerivationScript wrong_end{2, mc("a1 b1", 2), {}, mc("b1 a1", 2), {}};
    CHECK_THROWS_AS(replay(wrong_end, rs), StepError);
}

TEST_CASE("script text round trip") {
    std::string text =
        "# comment\ngenus: 1\nstart: a1 b1 a1 b1' a1'\nstep: braid.b1.a1.1 @ 0 bwd\ncheck: b1 a1 b1 b1' a1'\nend: b1\n";
    DerivationScript s = parse_script(text);
    CHECK(s.genus == 1);
    CHECK(s.steps == std::vector<DerivationStep>{{"braid.b1.a1.1", 0, false}});
    CHECK(s.checks.size() == 1);
    DerivationScript back = parse_script(format_script(s));
    CHECK(back.steps == s.steps);
    CHECK(back.start == s.start);
    CHECK(back.end == s.end);
    CHECK_THROWS(parse_script("start: a1\nstep: x @ zero fwd\nend: a1\n"));
}

TEST_CASE("shipped scripts replay and every step is sound in pi1") {
    auto scripts = shipped_scripts();
    CHECK(scripts.size() >= 6);
    for (const auto& path : scripts) {
        CAPTURE(path.filename().string());
        DerivationScript s = load_script_file(path.string());
        RuleSet rs = RuleSet::from_M1(s.genus);
        std::vector<Word> trace;
        REQUIRE_NOTHROW(trace = replay_trace(s, rs));
        CHECK(trace.back() == s.end);
        check_pi1_sound(trace, s.genus);
    }
}

TEST_CASE("scripts reach the printed identities") {
    auto load = [](const char* name) { return load_script_file(std::string(MCGKIT_SCRIPT_DIR) + "/" + name); };
    DerivationScript st1s = load("st1s.script");
    CHECK(st1s.start == expand_expression("s t1 s", 2));
    CHECK(st1s.end == expand_expression("b1 a1 e1 a2^2 e1 a1 b1 t1", 2));

    // Chain identity on c1..c5 = b1 a1 e1 a2 e2
    DerivationScript five = load("chain-five.script");
    CHECK(five.start == mc("(a1 b1 e1 a1) (a2 e1 e2 a2) (a1 b1 e1 a1)", 3));
    CHECK(five.end == mc("(a2 e2 e1 a2) (a1 b1 e1 a1) (a2 e1 e2 a2)", 3));
    CHECK(five.checks.size() >= 10);
}

TEST_CASE("search") {
    RuleSet r1 = RuleSet::from_M1(1);
    auto same = search(mc("a1 b1", 1), mc("a1 b1", 1), r1);
    REQUIRE(same);
    CHECK(same->steps.empty());

    SearchConfig ten;
    ten.max_steps = 10;
    auto aba = search(mc("(a1 b1) * a1", 1), mc("b1", 1), r1, ten);
    REQUIRE(aba);
    CHECK(replay(*aba, r1) == mc("b1", 1));

    RuleSet r3 = RuleSet::from_M1(3);
    auto chain = search(mc("a1 e1 a1 a2 e1 e2 a2", 3), mc("e1 a1 a2 e1 e2 a2 e2", 3), r3);
    REQUIRE(chain);
    CHECK(chain->steps.size() <= 20);
    std::vector<Word> trace = replay_trace(*chain, r3);
    check_pi1_sound(trace, 3);

    // a1 and b1 are different mapping classes: nothing is found
    SearchConfig small;
    small.max_steps = 4;
    CHECK_FALSE(search(mc("a1", 1), mc("b1", 1), r1, small));
}

TEST_CASE("Tietze moves") {
    Presentation g = presentation("G_full", 2);
    REQUIRE(std::find(g.generators.begin(), g.generators.end(), "b1") == g.generators.end());
    Presentation with_b1 = tietze(g, {TietzeMove::Kind::AddGenerator, {}, "b1", "a1' r a1'"});
    CHECK(with_b1.generators.back() == "b1");
    CHECK(with_b1.relators.back().id == "def.b1");
    CHECK_THROWS_AS(tietze(with_b1, {TietzeMove::Kind::AddGenerator, {}, "b1", "a1"}), TietzeError);

    Relator good;
    good.id = "b1.r";
    good.tag = "extra";
    good.lhs = "b1 a1 b1";
    good.rhs = "a1 b1 a1";
    CHECK(tietze(with_b1, {TietzeMove::Kind::AddRelator, good, {}, {}}).relators.back().id == "b1.r");
    Relator bad = good;
    bad.id = "bad";
    bad.rhs = "a1 b1";
    CHECK_THROWS_AS(tietze(with_b1, {TietzeMove::Kind::AddRelator, bad, {}, {}}), TietzeError);

    Presentation small;
    small.name = "small";
    small.genus = 2;
    small.generators = {"b1", "a1", "s"};
    small.relators = {Relator{"def.s", "def", "s", "b1 a1 a1 b1"}, Relator{"s.a1", "x", "s a1", "a1 s"},
                      Relator{"s2", "x", "s^2 d(1,2)", "d(1,2) s^2"}};
    Presentation removed = tietze(small, {TietzeMove::Kind::RemoveGenerator, {}, "s", {}});
    CHECK(removed.generators == std::vector<std::string>{"b1", "a1"});
    REQUIRE(removed.relators.size() == 2);
    CHECK(removed.relators[0].lhs == "(b1 a1 a1 b1) a1");
    CHECK(removed.relators[1].lhs == "(b1 a1 a1 b1)^2 d(1,2)");
    CHECK_THROWS_AS(tietze(removed, {TietzeMove::Kind::RemoveGenerator, {}, "a1", {}}), TietzeError);
}

TEST_CASE("symbol substitution is token level") {
    CHECK(substitute_symbol("s st1 s'", "s", "b1 a1") == "(b1 a1) st1 (b1 a1)'");
    CHECK(substitute_symbol("d(1,2) * d(1,3)", "d(1,2)", "x") == "(x) * d(1,3)");
}

}  // TEST_SUITE
