#include <algorithm>

#include "doctest.h"
#include "mcgkit/verifier.hpp"

using namespace mcg;

namespace {

using Status = CheckResult::Status;

Relator rel(std::string id, std::string lhs, std::string rhs) {
    Relator r;
    r.id = std::move(id);
    r.tag = "test";
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

const Relator& find(const std::vector<Relator>& rs, const std::string& id) {
    auto it = std::find_if(rs.begin(), rs.end(), [&](const Relator& r) { return r.id == id; });
    REQUIRE(it != rs.end());
    return *it;
}

std::string without_timing(CheckResult r) {
    r.ms = 0;
    return result_json(r);
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("single relators") {
    TwistTable t2 = load_twist_table(2);
    Presentation p = presentation("thm2", 2);
    CHECK(check_relator(find(p.relators, "M2"), t2, Rep::Pi1).status == Status::Holds);
    CHECK(check_relator(find(p.relators, "M2"), t2, Rep::Sp).status == Status::Holds);
    CHECK(check_relator(rel("empty", "", ""), t2, Rep::Pi1).status == Status::Holds);

    CheckResult wrong = check_relator(rel("wrong", "a1", "b1"), t2, Rep::Pi1);
    CHECK(wrong.status == Status::Fails);
    REQUIRE(wrong.witness);
    CHECK(wrong.unexpected());
    CHECK(check_relator(rel("wrong", "a1", "b1"), t2, Rep::Sp).status == Status::Fails);
}

TEST_CASE("(M4) fails in pi1 with a replayable witness and holds in Sp") {
    TwistTable t = load_twist_table(2);
    Presentation p = presentation("thm3", 2);
    const Relator& m4 = find(p.relators, "M4");
    CheckResult r = check_relator(m4, t, Rep::Pi1);
    REQUIRE(r.status == Status::Fails);
    REQUIRE(r.witness);
    CHECK(check_relator(m4, t, Rep::Sp).status == Status::Holds);

    // replay: the images of the named basis letter differ as reported
    Evaluator ev(t);
    Alphabet a = pi1_alphabet(2);
    std::size_t letter = a.find(r.witness->where);
    REQUIRE(letter < a.rank());
    CHECK(render(ev.pi1(m4.lhs).f.image(letter), a) == r.witness->lhs);
    CHECK(render(ev.pi1(m4.rhs).f.image(letter), a) == r.witness->rhs);
}

TEST_CASE("presentation reports") {
    TwistTable t3 = load_twist_table(3);
    Report thm1 = check_presentation(presentation("thm1", 3), t3, Rep::Pi1);
    CHECK(thm1.count(Status::Holds) == thm1.results.size());
    CHECK(std::is_sorted(thm1.results.begin(), thm1.results.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));

    Report thm3 = check_presentation(presentation("thm3", 2), load_twist_table(2), Rep::Pi1);
    std::vector<std::string> failing;
    for (const auto& r : thm3.results)
        if (r.status == Status::Fails) failing.push_back(r.id);
    CHECK(failing == std::vector<std::string>{"M4"});
}

TEST_CASE("suite runs honour the expected-fail list") {
    auto reports = run_suite("thm3", {.genus = 2, .reps = {Rep::Sp, Rep::Pi1}});
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].results.front().rep == Rep::Sp);
    std::size_t expected = 0;
    for (const auto& rp : reports) {
        CHECK(rp.unexpected() == 0);
        for (const auto& r : rp.results) expected += r.expected_fail;
    }
    CHECK(expected == 1);
    CHECK(representation_discrepancies(reports).empty());
    CHECK_THROWS_AS(run_suite("thm1", {.genus = 2}), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
}

TEST_CASE("sp-only relators are skipped in pi1 and hold in Sp") {
    auto reports = run_suite("sec5", {.genus = 2, .reps = {Rep::Sp, Rep::Pi1}});
    std::size_t skipped = 0;
    for (const auto& rp : reports) {
        CHECK(rp.unexpected() == 0);
        for (const auto& r : rp.results)
            if (r.status == Status::Skipped) {
                CHECK(r.rep == Rep::Pi1);
                CHECK(r.reason == "sp-only");
                ++skipped;
            }
    }
    CHECK(skipped > 0);
}

TEST_CASE("negative controls") {
    for (int g : {2, 3}) {
        Report r = run_negative_controls(g);
        CHECK(r.results.size() == 6);
        CHECK(r.unexpected() == 0);
        CHECK(r.count(Status::Holds) == 6);
    }
}

TEST_CASE("monotonicity: pi1 holds implies Sp holds on the corpus") {
    for (const char* s : {"thm1", "thm1p", "G_full", "sec4", "sec6", "lemma4", "lantern"}) {
        auto reports = run_suite(s, {.genus = 3, .reps = {Rep::Sp, Rep::Pi1}});
        CAPTURE(s);
        CHECK(representation_discrepancies(reports).empty());
    }
}

TEST_CASE("Sp compatibility over the relator corpus") {
    for (int g = 2; g <= 4; ++g) {
        TwistTable t = load_twist_table(g);
        Evaluator ev(t);
        std::vector<Relator> corpus;
        for (const auto& name : presentation_names()) {
            try {
                auto p = presentation(name, g);
                corpus.insert(corpus.end(), p.relators.begin(), p.relators.end());
            } catch (const std::invalid_argument&) {
            }
        }
        for (const auto& sec : fixture_sections()) {
            auto f = fixture_relations(sec, g);
            corpus.insert(corpus.end(), f.begin(), f.end());
        }
        std::size_t sides = 0;
        for (const auto& r : corpus) {
            CAPTURE(r.id);
            for (const std::string* side : {&r.lhs, &r.rhs}) {
                if (side->empty() || (side == &r.rhs && r.kind == Relator::Kind::BoundaryTwist)) continue;
                REQUIRE(abelianize(ev.pi1(*side).f) == ev.sp(*side).f);
                ++sides;
            }
        }
        CHECK(sides > 500);
    }
}

TEST_CASE("serial and parallel paths agree and are deterministic") {
    TwistTable t = load_twist_table(3);
    auto rels = presentation("thm3", 3).relators;
    auto serial = check_relators_serial(rels, t, Rep::Pi1);
    for (int jobs : {1, 2, 4}) {
        auto par = check_relators_parallel(rels, t, Rep::Pi1, jobs);
        REQUIRE(par.size() == serial.size());
        for (std::size_t i = 0; i < serial.size(); ++i) CHECK(without_timing(par[i]) == without_timing(serial[i]));
    }
    auto again = check_relators_serial(rels, t, Rep::Pi1);
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(without_timing(again[i]) == without_timing(serial[i]));
}

TEST_CASE("timeouts skip instead of hanging") {
    TwistTable t = load_twist_table(4);
    Relator big = rel("big", "(b1 a1 e1 a2 e2 a3 e3 a4)^400", "(b1 a1 e1 a2 e2 a3 e3 a4)^400");
    CheckOptions opt;
    opt.timeout = std::chrono::milliseconds(0);
    CheckResult r = check_relator(big, t, Rep::Pi1, opt);
    CHECK(r.status == Status::Skipped);
    CHECK(r.reason == "timeout");
    CHECK(r.unexpected());
}

}  // TEST_SUITE
