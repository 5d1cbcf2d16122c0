#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mcgkit/catalog.hpp"
#include "mcgkit/farey.hpp"
#include "mcgkit/rewrite.hpp"
#include "mcgkit/verifier.hpp"

namespace mcg::cli {

namespace {

constexpr int kUsage = 2;
constexpr int kFailed = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

std::string result_line(const CheckResult& r) {
    std::ostringstream s;
    s << r.id << " [" << r.tag << "] g=" << r.genus << ' ' << rep_name(r.rep) << ' ' << status_name(r.status);
    if (!r.reason.empty()) s << " (" << r.reason << ')';
    if (r.expected_fail) s << " expected";
    if (r.witness) s << "  at " << r.witness->where << ": " << r.witness->lhs << " != " << r.witness->rhs;
    return s.str();
}

int cmd_verify(const std::string& suite, int genus, const std::string& rep, int jobs, long timeout_ms,
               const std::string& json, std::ostream& out, std::ostream& err) {
    SuiteOptions opt;
    opt.genus = genus;
    opt.jobs = std::max(jobs, 1);
    opt.check.timeout = std::chrono::milliseconds(timeout_ms);
    if (rep == "both")
        opt.reps = {Rep::Sp, Rep::Pi1};
    else
        opt.reps = {parse_rep(rep)};

    std::vector<Report> reports;
    try {
        reports = run_suite(suite, opt);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::size_t unexpected = 0;
    std::string lines;
    for (const auto& rep_ : reports) {
        for (const auto& r : rep_.results) {
            if (json != "-") out << result_line(r) << '\n';
            lines += result_json(r) + '\n';
        }
        unexpected += rep_.unexpected();
    }
    lines += summary_json(reports) + '\n';
    if (!json.empty()) write_file(json, lines, out);

    auto bugs = representation_discrepancies(reports);
    if (!bugs.empty()) {
        err << "representation bug: sp fails but pi1 holds for";
        for (const auto& id : bugs) err << ' ' << id;
        err << '\n';
        return kFailed;
    }
    if (json != "-") {
        std::size_t n = 0;
        for (const auto& r : reports) n += r.results.size();
        out << suite << ": " << n << " checks, " << unexpected << " unexpected\n";
    }
    return unexpected == 0 ? 0 : kFailed;
}

int cmd_expand(const std::string& symbol, int genus, std::ostream& out) {
    Word w;
    try {
        w = expand_expression(symbol, genus);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    out << render(w, mc_alphabet(genus)) << '\n';
    return 0;
}

int cmd_eval(const std::string& word, int genus, const std::string& rep, std::ostream& out) {
    if (genus < 1) throw UsageError("genus must be at least 1");
    TwistTable table = load_twist_table(genus);
    Evaluator ev(table);
    try {
        if (parse_rep(rep) == Rep::Sp) {
            out << ev.sp(word).f.str() << '\n';
        } else {
            Pi1Value v = ev.pi1(word);
            Alphabet a = pi1_alphabet(genus);
            for (std::size_t i = 0; i < v.f.rank(); ++i)
                out << a.name(i) << " -> " << render(v.f.image(i), a) << '\n';
        }
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    return 0;
}

int cmd_farey_reduce(const std::string& path_text, const std::string& json, std::ostream& out, std::ostream& err) {
    farey::Path p;
    try {
        p = farey::parse_path(path_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!farey::is_closed_path(p)) throw UsageError("not a closed Farey path: " + path_text);
    farey::Reduction red;
    try {
        red = farey::reduce_closed_path(p);
    } catch (const std::logic_error& e) {
        err << "reduction failed: " << e.what() << '\n';
        return kFailed;
    }
    bool valid = farey::validate_certificate(p, red.certificate);
    std::string j = farey::certificate_json(p, red.certificate) + '\n';
    if (!json.empty()) write_file(json, j, out);
    if (json != "-") {
        for (const auto& m : red.certificate)
            out << (m.kind == farey::Move::Kind::Triangle ? "triangle" : "backtrack") << " @" << m.index << ' '
                << m.a.str() << ' ' << m.b.str() << ' ' << m.c.str() << '\n';
        out << (valid ? "certificate valid" : "certificate INVALID") << '\n';
    }
    return valid ? 0 : kFailed;
}

int cmd_farey_connect(const std::string& from, const std::string& to, std::ostream& out) {
    farey::Vertex v, w;
    try {
        v = farey::parse_vertex(from);
        w = farey::parse_vertex(to);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    out << farey::format_path(farey::connect(v, w)) << '\n';
    return 0;
}

int cmd_farey_random(int count, int max_len, long bound, std::uint64_t seed, int jobs, std::ostream& out,
                     std::ostream& err) {
    std::mt19937_64 rng(seed);
    std::vector<farey::Path> paths;
    for (int i = 0; i < count; ++i)
        paths.push_back(farey::random_closed_path(rng, static_cast<std::size_t>(max_len), bound));
    std::vector<farey::Reduction> reds;
    try {
        reds = farey::reduce_batch_parallel(paths, std::max(jobs, 1));
    } catch (const std::logic_error& e) {
        err << "reduction failed: " << e.what() << '\n';
        return kFailed;
    }
    std::size_t invalid = 0, triangles = 0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (!farey::validate_certificate(paths[i], reds[i].certificate)) ++invalid;
        for (const auto& m : reds[i].certificate) triangles += m.kind == farey::Move::Kind::Triangle;
    }
    out << count << " paths, " << triangles << " triangles, " << invalid << " invalid certificates (seed " << seed
        << ")\n";
    return invalid == 0 ? 0 : kFailed;
}

int cmd_rewrite_search(const std::string& lhs, const std::string& rhs, int genus, int max_steps, std::ostream& out,
                       std::ostream& err) {
    if (genus < 1) throw UsageError("genus must be at least 1");
    Word l, r;
    try {
        l = expand_expression(lhs, genus);
        r = expand_expression(rhs, genus);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    SearchConfig cfg;
    cfg.max_steps = max_steps;
    auto found = search(l, r, RuleSet::from_M1(genus), cfg);
    if (!found) {
        err << "no derivation within " << max_steps << " steps (inconclusive)\n";
        return kFailed;
    }
    found->genus = genus;
    out << format_script(*found);
    return 0;
}

int cmd_rewrite_replay(const std::string& file, std::ostream& out, std::ostream& err) {
    DerivationScript script;
    try {
        script = load_script_file(file);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    RuleSet rules = RuleSet::from_M1(script.genus);
    std::vector<Word> trace;
    try {
        trace = replay_trace(script, rules);
    } catch (const StepError& e) {
        err << file << ": " << e.what() << '\n';
        return kFailed;
    }
    // Each intermediate word must act on pi_1 like the start word.
    TwistTable table = load_twist_table(script.genus);
    Endo start = table.evaluate(trace.front());
    for (std::size_t i = 1; i < trace.size(); ++i)
        if (!equal(table.evaluate(trace[i]), start)) {
            err << file << ": step " << i - 1 << " changes the pi1 action\n";
            return kFailed;
        }
    const Alphabet& a = rules.alphabet();
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i > 0) {
            const auto& s = script.steps[i - 1];
            out << "  " << s.rule << " @ " << s.pos << (s.forward ? " fwd" : " bwd") << '\n';
        }
        out << render(trace[i], a) << '\n';
    }
    out << "replayed " << script.steps.size() << " steps\n";
    return 0;
}

int cmd_catalog_export(const std::string& name, int genus, const std::string& file, std::ostream& out) {
    Presentation p;
    try {
        p = presentation(name, genus);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    write_file(file, export_presentation(p), out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mapping class group presentation toolkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string suite, rep = "pi1", json;
    int genus = 0, jobs = 1;
    long timeout_ms = 60'000;
    auto* verify = app.add_subcommand("verify", "check a relator suite in a representation");
    verify->add_option("--suite", suite)->required();
    verify->add_option("--genus", genus, "0 runs the suite's default genera");
    verify->add_option("--rep", rep)->check(CLI::IsMember({"pi1", "sp", "both"}));
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    verify->add_option("--timeout-ms", timeout_ms)->check(CLI::PositiveNumber);
    verify->add_option("--json", json, "JSON-lines output file ('-' for stdout)");
    verify->callback([&] { action = [&] { return cmd_verify(suite, genus, rep, jobs, timeout_ms, json, out, err); }; });

    std::string symbol;
    auto* expand = app.add_subcommand("expand", "expand a symbol or expression to generators");
    expand->add_option("--symbol", symbol)->required();
    expand->add_option("--genus", genus)->required()->check(CLI::PositiveNumber);
    expand->callback([&] { action = [&] { return cmd_expand(symbol, genus, out); }; });

    std::string word;
    auto* eval = app.add_subcommand("eval", "evaluate an expression in a representation");
    eval->add_option("--word", word)->required();
    eval->add_option("--genus", genus)->required()->check(CLI::PositiveNumber);
    eval->add_option("--rep", rep)->check(CLI::IsMember({"pi1", "sp"}));
    eval->callback([&] { action = [&] { return cmd_eval(word, genus, rep, out); }; });

    auto* farey = app.add_subcommand("farey", "Farey graph paths");
    farey->require_subcommand(1);
    std::string path, from, to;
    auto* reduce = farey->add_subcommand("reduce", "reduce a closed path to its base vertex");
    reduce->add_option("--path", path)->required();
    reduce->add_option("--json", json, "certificate output file ('-' for stdout)");
    reduce->callback([&] { action = [&] { return cmd_farey_reduce(path, json, out, err); }; });
    auto* connect = farey->add_subcommand("connect", "path between two vertices");
    connect->add_option("--from", from)->required();
    connect->add_option("--to", to)->required();
    connect->callback([&] { action = [&] { return cmd_farey_connect(from, to, out); }; });
    int count = 1000, max_len = 40;
    long bound = 60;
    std::uint64_t seed = 42;
    auto* random = farey->add_subcommand("random", "reduce seeded random closed paths");
    random->add_option("--count", count)->check(CLI::NonNegativeNumber);
    random->add_option("--max-len", max_len)->check(CLI::Range(4, 1000));
    random->add_option("--bound", bound)->check(CLI::PositiveNumber);
    random->add_option("--seed", seed);
    random->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    random->callback([&] { action = [&] { return cmd_farey_random(count, max_len, bound, seed, jobs, out, err); }; });

    auto* rewrite = app.add_subcommand("rewrite", "braid and commutation rewriting");
    rewrite->require_subcommand(1);
    std::string lhs, rhs, script;
    int max_steps = 20;
    auto* search_cmd = rewrite->add_subcommand("search", "bounded search for a derivation");
    search_cmd->add_option("--lhs", lhs)->required();
    search_cmd->add_option("--rhs", rhs)->required();
    search_cmd->add_option("--genus", genus)->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--max-steps", max_steps)->check(CLI::NonNegativeNumber);
    search_cmd->callback([&] { action = [&] { return cmd_rewrite_search(lhs, rhs, genus, max_steps, out, err); }; });
    auto* replay_cmd = rewrite->add_subcommand("replay", "replay a derivation script");
    replay_cmd->add_option("--script", script)->required();
    replay_cmd->callback([&] { action = [&] { return cmd_rewrite_replay(script, out, err); }; });

    auto* catalog = app.add_subcommand("catalog", "presentations");
    catalog->require_subcommand(1);
    std::string name, file;
    auto* exp = catalog->add_subcommand("export", "write a presentation");
    exp->add_option("--name", name)->required();
    exp->add_option("--genus", genus)->required()->check(CLI::PositiveNumber);
    exp->add_option("--out", file)->required();
    exp->callback([&] { action = [&] { return cmd_catalog_export(name, genus, file, out); }; });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsage;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const WordLengthExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kFailed;
    }
}

}  // namespace mcg::cli
