#include "mcgkit/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <tuple>

#include "json.hpp"

#include "mcgkit/expr.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcg {

std::string rep_name(Rep r) { return r == Rep::Pi1 ? "pi1" : "sp"; }

Rep parse_rep(const std::string& s) {
    if (s == "pi1") return Rep::Pi1;
    if (s == "sp") return Rep::Sp;
    throw std::invalid_argument("unknown representation " + s);
}

std::string status_name(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::Holds: return "holds";
        case CheckResult::Status::Fails: return "fails";
        case CheckResult::Status::Skipped: return "skipped";
    }
    return {};
}

namespace {

const char* kSpOnly = "sp-only";

struct Pi1Algebra {
    using value_type = Pi1Value;
    Evaluator& ev;
    const Deadline& dl;

    Pi1Value one() const { return {Endo::identity(ev.genus()), Endo::identity(ev.genus())}; }
    Pi1Value mul(const Pi1Value& a, const Pi1Value& b) const {
        dl.check();
        return {compose(a.f, b.f), compose(b.inv, a.inv)};
    }
    Pi1Value inv(const Pi1Value& a) const { return {a.inv, a.f}; }
    Pi1Value pow(const Pi1Value& a, long long n) const {
        Pi1Value base = n < 0 ? inv(a) : a;
        unsigned long long k = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
        Pi1Value r = one();
        bool first = true;
        while (k) {
            if (k & 1) {
                r = first ? base : mul(r, base);
                first = false;
            }
            k >>= 1;
            if (k) base = mul(base, base);
        }
        return r;
    }
    Pi1Value conj(const Pi1Value& a, const Pi1Value& b) const { return mul(mul(a, b), inv(a)); }
    Pi1Value symbol(const std::string& label) const { return ev.pi1_symbol(label, dl); }
};

struct SpAlgebra {
    using value_type = SpValue;
    Evaluator& ev;

    SpValue one() const { return {SympMatrix(ev.genus()), SympMatrix(ev.genus())}; }
    SpValue mul(const SpValue& a, const SpValue& b) const { return {a.f * b.f, b.inv * a.inv}; }
    SpValue inv(const SpValue& a) const { return {a.inv, a.f}; }
    SpValue pow(const SpValue& a, long long n) const {
        SpValue base = n < 0 ? inv(a) : a;
        unsigned long long k = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
        SpValue r = one();
        while (k) {
            if (k & 1) r = mul(r, base);
            k >>= 1;
            if (k) base = mul(base, base);
        }
        return r;
    }
    SpValue conj(const SpValue& a, const SpValue& b) const { return mul(mul(a, b), inv(a)); }
    SpValue symbol(const std::string& label) const { return ev.sp_symbol(label); }
};

std::string clip(std::string s) {
    if (s.size() > 240) s = s.substr(0, 240) + " ...";
    return s.empty() ? "1" : s;
}

std::optional<Witness> endo_witness(const Endo& l, const Endo& r) {
    Alphabet a = pi1_alphabet(l.genus());
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (l.image(i) != r.image(i)) return Witness{a.name(i), clip(render(l.image(i), a)), clip(render(r.image(i), a))};
    return std::nullopt;
}

std::optional<Witness> matrix_witness(const SympMatrix& l, const SympMatrix& r) {
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j)
            if (l.at(i, j) != r.at(i, j))
                return Witness{"(" + std::to_string(i) + "," + std::to_string(j) + ")", l.at(i, j).str(), r.at(i, j).str()};
    return std::nullopt;
}

}  // namespace

Evaluator::Evaluator(const TwistTable& table, bool mirrored) : table_(&table), mirrored_(mirrored) {}

const Pi1Value& Evaluator::pi1_symbol(const std::string& label, const Deadline& dl) {
    if (auto it = pi1_memo_.find(label); it != pi1_memo_.end()) return it->second;
    auto def = symbol_definition(label, genus());
    Pi1Value v;
    if (def) {
        Pi1Algebra alg{*this, dl};
        v = parse_with(*def, alg);
    } else {
        const TwistEntry& e = table_->entry(label);
        v = {e.forward, invert_generator(e)};
        if (mirrored_) std::swap(v.f, v.inv);
    }
    return pi1_memo_.emplace(label, std::move(v)).first->second;
}

const SpValue& Evaluator::sp_symbol(const std::string& label) {
    if (auto it = sp_memo_.find(label); it != sp_memo_.end()) return it->second;
    auto def = symbol_definition(label, genus());
    SpValue v;
    if (def) {
        SpAlgebra alg{*this};
        v = parse_with(*def, alg);
    } else {
        const TwistEntry& e = table_->entry(label);
        v = {transvection_power(e.cls, 1), transvection_power(e.cls, -1)};
        if (mirrored_) std::swap(v.f, v.inv);
    }
    return sp_memo_.emplace(label, std::move(v)).first->second;
}

Pi1Value Evaluator::pi1(const std::string& text, const Deadline& dl) {
    Pi1Algebra alg{*this, dl};
    return parse_with(text, alg);
}

SpValue Evaluator::sp(const std::string& text) {
    SpAlgebra alg{*this};
    return parse_with(text, alg);
}

bool CheckResult::unexpected() const {
    switch (status) {
        case Status::Holds: return expected_fail;
        case Status::Fails: return !expected_fail;
        case Status::Skipped: return reason != kSpOnly;
    }
    return true;
}

std::size_t Report::count(CheckResult::Status s) const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [&](const CheckResult& r) { return r.status == s; }));
}

std::size_t Report::unexpected() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.unexpected(); }));
}

CheckResult check_relator(const Relator& rel, Evaluator& ev, Evaluator& mirror_ev, Rep rep, const CheckOptions& opt) {
    CheckResult res;
    res.id = rel.id;
    res.tag = rel.tag;
    res.genus = ev.genus();
    res.rep = rep;
    auto t0 = std::chrono::steady_clock::now();
    Evaluator& lev = rel.mirror_lhs ? mirror_ev : ev;
    try {
        if (rel.min_genus > ev.genus()) {
            res.reason = "needs genus " + std::to_string(rel.min_genus);
        } else if (rep == Rep::Pi1 && rel.sp_only) {
            res.reason = kSpOnly;
        } else if (rep == Rep::Pi1) {
            Deadline dl(opt.timeout);
            Endo l = lev.pi1(rel.lhs, dl).f;
            Endo r = rel.kind == Relator::Kind::BoundaryTwist
                         ? inner(ev.genus(), power(boundary_word(ev.genus()), kBoundarySign))
                         : ev.pi1(rel.rhs, dl).f;
            res.witness = endo_witness(l, r);
            res.status = res.witness ? CheckResult::Status::Fails : CheckResult::Status::Holds;
        } else {
            SympMatrix l = lev.sp(rel.lhs).f;
            SympMatrix r = rel.kind == Relator::Kind::BoundaryTwist ? SympMatrix(ev.genus()) : ev.sp(rel.rhs).f;
            res.witness = matrix_witness(l, r);
            res.status = res.witness ? CheckResult::Status::Fails : CheckResult::Status::Holds;
        }
    } catch (const Timeout&) {
        res.status = CheckResult::Status::Skipped;
        res.reason = "timeout";
    } catch (const WordLengthExceeded& e) {
        res.status = CheckResult::Status::Skipped;
        res.reason = e.what();
    } catch (const std::exception& e) {
        res.status = CheckResult::Status::Skipped;
        res.reason = std::string("expansion failed: ") + e.what();
    }
    res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

CheckResult check_relator(const Relator& rel, const TwistTable& table, Rep rep, const CheckOptions& opt) {
    Evaluator ev(table), mev(table, true);
    return check_relator(rel, ev, mev, rep, opt);
}

std::vector<CheckResult> check_relators_serial(const std::vector<Relator>& rels, const TwistTable& table, Rep rep,
                                               const CheckOptions& opt) {
    Evaluator ev(table), mev(table, true);
    std::vector<CheckResult> out;
    out.reserve(rels.size());
    for (const auto& r : rels) out.push_back(check_relator(r, ev, mev, rep, opt));
    return out;
}

std::vector<CheckResult> check_relators_parallel(const std::vector<Relator>& rels, const TwistTable& table, Rep rep,
                                                 int jobs, const CheckOptions& opt) {
#ifdef _OPENMP
    if (jobs < 1) jobs = omp_get_max_threads();
    std::vector<CheckResult> out(rels.size());
    const long n = static_cast<long>(rels.size());
#pragma omp parallel num_threads(jobs)
    {
        Evaluator ev(table), mev(table, true);
#pragma omp for schedule(dynamic, 1)
        for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = check_relator(rels[static_cast<std::size_t>(i)], ev, mev, rep, opt);
    }
    return out;
#else
    (void)jobs;
    return check_relators_serial(rels, table, rep, opt);
#endif
}

namespace {

void sort_by_id(std::vector<CheckResult>& v) {
    std::stable_sort(v.begin(), v.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

}  // namespace

Report check_presentation(const Presentation& pres, const TwistTable& table, Rep rep, int jobs, const CheckOptions& opt) {
    if (pres.genus != table.genus()) throw std::invalid_argument("check_presentation: genus mismatch");
    Report rpt;
    rpt.suite = pres.name;
    rpt.genus = pres.genus;
    rpt.results = jobs == 1 ? check_relators_serial(pres.relators, table, rep, opt)
                            : check_relators_parallel(pres.relators, table, rep, jobs, opt);
    sort_by_id(rpt.results);
    return rpt;
}

namespace {

const TwistTable& cached_table(int g) {
    static std::mutex mu;
    static std::map<int, TwistTable> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(g);
    if (it == tables.end()) it = tables.emplace(g, load_twist_table(g)).first;
    return it->second;
}

std::string m4_commutator(int g) {
    std::string x = "b1 a1";
    for (int i = 1; i < g; ++i) x += " e" + std::to_string(i) + " a" + std::to_string(i + 1);
    x += " a" + std::to_string(g);
    for (int i = g - 1; i >= 1; --i) x += " e" + std::to_string(i) + " a" + std::to_string(i);
    x += " b1";
    const std::string d = "d" + std::to_string(g);
    return "(" + x + ") " + d + " (" + x + ")' " + d + "'";
}

std::string d_commutator(int g) {
    std::string y;
    for (int i = g; i >= 1; --i) {
        y += "a" + std::to_string(i) + " ";
        if (i > 1) y += "e" + std::to_string(i - 1) + " ";
    }
    y += "b1^2";
    for (int i = 1; i <= g; ++i) {
        y += " a" + std::to_string(i);
        if (i < g) y += " e" + std::to_string(i);
    }
    const std::string d = "db" + std::to_string(g);
    return "(" + y + ") " + d + " (" + y + ")' " + d + "'";
}

}  // namespace

Report run_negative_controls(int g, const CheckOptions& opt) {
    if (g < 2) throw std::invalid_argument("negative controls need genus at least 2");
    const TwistTable& table = cached_table(g);
    Evaluator ev(table);
    Report rpt;
    rpt.suite = "negative";
    rpt.genus = g;
    const std::string dg = "d" + std::to_string(g);
    const std::string final_delta =
        dg + "^2 b1 a1 b1 " + dg + " (a1' b1' " + dg + "')^3 " + dg + "^2 b1";

    // Each control holds when the expression is nontrivial (pi1) or trivial (sp) as stated.
    struct Control {
        std::string id, tag, text;
        Rep rep;
        bool want_identity;
    };
    std::vector<Control> controls{
        {"neg.M4.pi1", "M4", m4_commutator(g), Rep::Pi1, false},
        {"neg.M4.sp", "M4", m4_commutator(g), Rep::Sp, true},
        {"neg.final-delta.sp", "closed", final_delta, Rep::Sp, true},
        {"neg.delta.pi1", "closed", "Delta", Rep::Pi1, false},
        {"neg.D.pi1", "D", d_commutator(g), Rep::Pi1, false},
        {"neg.D.sp", "D", d_commutator(g), Rep::Sp, true},
    };
    for (const auto& c : controls) {
        CheckResult res;
        res.id = c.id;
        res.tag = c.tag;
        res.genus = g;
        res.rep = c.rep;
        auto t0 = std::chrono::steady_clock::now();
        try {
            std::optional<Witness> diff;
            if (c.rep == Rep::Pi1) {
                Deadline dl(opt.timeout);
                diff = endo_witness(ev.pi1(c.text, dl).f, Endo::identity(g));
            } else {
                diff = matrix_witness(ev.sp(c.text).f, SympMatrix(g));
            }
            bool is_identity = !diff;
            res.status = is_identity == c.want_identity ? CheckResult::Status::Holds : CheckResult::Status::Fails;
            if (res.status == CheckResult::Status::Fails) {
                res.witness = diff ? *diff : Witness{"all", "identity", "nonidentity expected"};
            }
        } catch (const Timeout&) {
            res.reason = "timeout";
        } catch (const std::exception& e) {
            res.reason = e.what();
        }
        res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rpt.results.push_back(std::move(res));
    }
    return rpt;
}

std::vector<std::string> suite_names() {
    return {"thm1", "thm1p", "thm2", "thm3", "thm3p", "H_stab", "G_full", "disk_holes",
            "sec4", "sec5", "sec6", "lemma4", "lantern", "negative", "all"};
}

std::set<std::string> expected_failures(const std::string& suite, Rep rep) {
    if (rep != Rep::Pi1) return {};
    if (suite == "thm3") return {"M4"};
    if (suite == "thm3p") return {"D"};
    return {};
}

namespace {

bool is_fixture_suite(const std::string& s) {
    return s == "sec4" || s == "sec5" || s == "sec6" || s == "lemma4" || s == "lantern";
}

std::vector<int> default_genera(const std::string& s) {
    if (s == "thm1") return {3};
    if (s == "thm2") return {2};
    if (s == "thm3" || s == "thm3p" || s == "thm1p" || s == "negative") return {2, 3};
    return {3};
}

constexpr int kBlanketGenus = 4;

std::vector<Report> run_one(const std::string& suite, const SuiteOptions& opt, Rep rep) {
    std::vector<Report> out;
    auto run_rels = [&](const std::string& name, int g, const std::vector<Relator>& rels) {
        Report r;
        r.suite = name;
        r.genus = g;
        r.results = opt.jobs == 1 ? check_relators_serial(rels, cached_table(g), rep, opt.check)
                                  : check_relators_parallel(rels, cached_table(g), rep, opt.jobs, opt.check);
        sort_by_id(r.results);
        auto xf = expected_failures(suite, rep);
        for (auto& c : r.results) c.expected_fail = xf.count(c.id) > 0;
        out.push_back(std::move(r));
    };
    if (suite == "negative") {
        auto gens = opt.genus ? std::vector<int>{opt.genus} : default_genera(suite);
        for (int g : gens) {
            Report r = run_negative_controls(g, opt.check);
            std::erase_if(r.results, [&](const CheckResult& c) { return c.rep != rep; });
            out.push_back(std::move(r));
        }
        return out;
    }
    if (is_fixture_suite(suite)) {
        if (opt.genus) {
            run_rels(suite, opt.genus, fixture_relations(suite, opt.genus));
            return out;
        }
        for (int m = 1; m < kBlanketGenus; ++m) {
            std::vector<Relator> at_min;
            for (auto& r : fixture_relations(suite, m))
                if (r.min_genus == m) at_min.push_back(std::move(r));
            if (!at_min.empty()) run_rels(suite, m, at_min);
        }
        run_rels(suite, kBlanketGenus, fixture_relations(suite, kBlanketGenus));
        return out;
    }
    auto gens = opt.genus ? std::vector<int>{opt.genus} : default_genera(suite);
    for (int g : gens) {
        std::string name = suite == "disk_holes" ? "disk_holes(" + std::to_string(2 * g) + ")" : suite;
        Presentation p = presentation(name, g);
        run_rels(p.name, g, p.relators);
    }
    return out;
}

}  // namespace

std::vector<Report> run_suite(const std::string& suite, const SuiteOptions& opt) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite " + suite);
    std::vector<Rep> reps = opt.reps;
    std::stable_sort(reps.begin(), reps.end(), [](Rep a, Rep b) { return a == Rep::Sp && b == Rep::Pi1; });
    std::vector<Report> out;
    std::vector<std::string> parts{suite};
    if (suite == "all") parts.assign(names.begin(), names.end() - 1);
    for (Rep rep : reps)
        for (const auto& s : parts)
            for (auto& r : run_one(s, opt, rep)) out.push_back(std::move(r));
    return out;
}

std::vector<std::string> representation_discrepancies(const std::vector<Report>& reports) {
    std::map<std::tuple<std::string, int, std::string>, CheckResult::Status> sp;
    for (const auto& r : reports)
        for (const auto& c : r.results)
            if (c.rep == Rep::Sp) sp[{r.suite, c.genus, c.id}] = c.status;
    std::vector<std::string> out;
    for (const auto& r : reports)
        for (const auto& c : r.results) {
            if (c.rep != Rep::Pi1 || c.status != CheckResult::Status::Holds || r.suite == "negative") continue;
            auto it = sp.find({r.suite, c.genus, c.id});
            if (it != sp.end() && it->second == CheckResult::Status::Fails)
                out.push_back(r.suite + "@" + std::to_string(c.genus) + ":" + c.id);
        }
    return out;
}

std::string result_json(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["tag"] = r.tag;
    j["genus"] = r.genus;
    j["rep"] = rep_name(r.rep);
    j["status"] = status_name(r.status);
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.expected_fail) j["expected_fail"] = true;
    j["ms"] = std::round(r.ms * 1000) / 1000;
    if (r.witness) j["witness"] = {{"at", r.witness->where}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
    return j.dump();
}

std::string summary_json(const std::vector<Report>& reports) {
    std::size_t holds = 0, fails = 0, skipped = 0, unexpected = 0;
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        holds += r.count(CheckResult::Status::Holds);
        fails += r.count(CheckResult::Status::Fails);
        skipped += r.count(CheckResult::Status::Skipped);
        unexpected += r.unexpected();
        runs.push_back({{"suite", r.suite}, {"genus", r.genus}, {"checks", r.results.size()}});
    }
    nlohmann::ordered_json j;
    j["summary"] = true;
    j["runs"] = runs;
    j["holds"] = holds;
    j["fails"] = fails;
    j["skipped"] = skipped;
    j["unexpected"] = unexpected;
    return j.dump();
}

}  // namespace mcg
