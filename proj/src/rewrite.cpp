#include "mcgkit/rewrite.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mcgkit/verifier.hpp"

namespace mcg {

RuleSet::RuleSet(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

std::size_t RuleSet::letter(const std::string& x) const {
    std::size_t i = alphabet_.find(x);
    if (i >= alphabet_.rank()) throw std::invalid_argument("rule set: unknown generator " + x);
    return i;
}

void RuleSet::add(Rule r) {
    if (index_.count(r.id)) throw std::invalid_argument("rule set: duplicate rule " + r.id);
    index_[r.id] = rules_.size();
    rules_.push_back(std::move(r));
}

void RuleSet::check_fresh(const std::string& x, const std::string& y) const {
    auto same = [&](const auto& v) {
        return std::any_of(v.begin(), v.end(), [&](const auto& p) {
            return (p.first == x && p.second == y) || (p.first == y && p.second == x);
        });
    };
    if (same(braided_) || same(commuting_)) throw std::invalid_argument("rule set: pair already declared " + x + "," + y);
}

void RuleSet::add_braid(const std::string& x, const std::string& y) {
    check_fresh(x, y);
    Letter X = make_letter(letter(x), 1), Y = make_letter(letter(y), 1);
    const std::string base = "braid." + x + "." + y + ".";
    // Length-three consequences of x y x = y x y.
    add({base + "1", {X, Y, X}, {Y, X, Y}});
    add({base + "2", {-X, -Y, -X}, {-Y, -X, -Y}});
    add({base + "3", {X, Y, -X}, {-Y, X, Y}});
    add({base + "4", {-X, Y, X}, {Y, X, -Y}});
    add({base + "5", {X, -Y, -X}, {-Y, -X, Y}});
    add({base + "6", {-X, -Y, X}, {Y, -X, -Y}});
    braided_.emplace_back(x, y);
}

void RuleSet::add_commute(const std::string& x, const std::string& y) {
    check_fresh(x, y);
    Letter X = make_letter(letter(x), 1), Y = make_letter(letter(y), 1);
    const std::string base = "comm." + x + "." + y + ".";
    for (int sx : {1, -1})
        for (int sy : {1, -1})
            add({base + (sx > 0 ? "+" : "-") + (sy > 0 ? "+" : "-"), {sx * X, sy * Y}, {sy * Y, sx * X}});
    commuting_.emplace_back(x, y);
}

void RuleSet::add_equation(const std::string& id, const Word& lhs, const Word& rhs) {
    if (lhs.empty() && rhs.empty()) throw std::invalid_argument("rule set: empty equation");
    add({"eq." + id, lhs.letters(), rhs.letters()});
}

const Rule& RuleSet::rule(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("unknown rule " + id);
    return rules_[it->second];
}

RuleSet RuleSet::from_M1(int g, bool with_M2) {
    Alphabet a = mc_alphabet(g);
    RuleSet rs(a);
    auto braided = [&](std::size_t i, std::size_t j) {
        const std::string &u = a.name(i), &v = a.name(j);
        if (u == "b2" || v == "b2") return u == "a2" || v == "a2";
        return (i > j ? i - j : j - i) == 1;
    };
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = i + 1; j < a.rank(); ++j) {
            if (braided(i, j))
                rs.add_braid(a.name(i), a.name(j));
            else
                rs.add_commute(a.name(i), a.name(j));
        }
    if (with_M2 && g >= 2)
        rs.add_equation("M2", parse_word("(b1 a1 e1 a2)^5", a), parse_word("b2 a2 e1 a1 b1^2 a1 e1 a2 b2", a));
    return rs;
}

StepError::StepError(std::size_t index, const std::string& msg)
    : std::runtime_error("step " + std::to_string(index) + ": " + msg), index_(index) {}

namespace {

bool matches(const std::vector<Letter>& w, std::size_t pos, const std::vector<Letter>& pat) {
    if (pos + pat.size() > w.size()) return false;
    return std::equal(pat.begin(), pat.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::vector<Letter> splice(const std::vector<Letter>& w, std::size_t pos, std::size_t len, const std::vector<Letter>& rep) {
    std::vector<Letter> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), rep.begin(), rep.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
    return out;
}

}  // namespace

Word apply_step(const Word& w, const DerivationStep& step, const RuleSet& rules) {
    const Rule& r = rules.rule(step.rule);
    const auto& from = step.forward ? r.lhs : r.rhs;
    const auto& to = step.forward ? r.rhs : r.lhs;
    if (!matches(w.letters(), step.pos, from))
        throw std::invalid_argument("rule " + step.rule + " does not match at position " + std::to_string(step.pos));
    return Word(splice(w.letters(), step.pos, from.size(), to));
}

std::vector<Word> replay_trace(const DerivationScript& script, const RuleSet& rules) {
    std::vector<Word> trace{script.start};
    auto check_at = [&](std::size_t k) {
        for (const auto& c : script.checks)
            if (c.after == k && c.word != trace.back())
                throw StepError(k, "checkpoint mismatch: have " + render(trace.back(), rules.alphabet()) + ", expected " +
                                       render(c.word, rules.alphabet()));
    };
    check_at(0);
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        try {
            trace.push_back(apply_step(trace.back(), script.steps[i], rules));
        } catch (const std::invalid_argument& e) {
            throw StepError(i + 1, e.what());
        }
        check_at(i + 1);
    }
    if (trace.back() != script.end)
        throw StepError(script.steps.size(), "final word " + render(trace.back(), rules.alphabet()) +
                                                 " differs from claimed end " + render(script.end, rules.alphabet()));
    return trace;
}

Word replay(const DerivationScript& script, const RuleSet& rules) { return replay_trace(script, rules).back(); }

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<Letter>& v) const {
        std::size_t h = v.size();
        for (Letter l : v) h ^= static_cast<std::size_t>(l) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct Edge {
    std::vector<Letter> other;
    DerivationStep step;
};

}  // namespace

std::optional<DerivationScript> search(const Word& lhs, const Word& rhs, const RuleSet& rules, const SearchConfig& cfg) {
    DerivationScript out;
    out.start = lhs;
    out.end = rhs;
    if (lhs == rhs) return out;
    const std::size_t cap = cfg.max_length ? cfg.max_length : 2 * std::max(lhs.size(), rhs.size()) + 8;

    // Patterns by first letter: (rule index, forward).
    std::unordered_map<Letter, std::vector<std::pair<std::size_t, bool>>> by_first;
    for (std::size_t i = 0; i < rules.rules().size(); ++i) {
        const Rule& r = rules.rules()[i];
        if (!r.lhs.empty()) by_first[r.lhs[0]].emplace_back(i, true);
        if (!r.rhs.empty()) by_first[r.rhs[0]].emplace_back(i, false);
    }
    // exact: only moves without cancellation, which are reversible at the same position.
    auto neighbours = [&](const std::vector<Letter>& w, bool exact, auto&& visit) {
        for (std::size_t p = 0; p < w.size(); ++p) {
            auto it = by_first.find(w[p]);
            if (it == by_first.end()) continue;
            for (auto [ri, fwd] : it->second) {
                const Rule& r = rules.rules()[ri];
                const auto& from = fwd ? r.lhs : r.rhs;
                const auto& to = fwd ? r.rhs : r.lhs;
                if (!matches(w, p, from)) continue;
                std::vector<Letter> raw = splice(w, p, from.size(), to);
                std::vector<Letter> red = free_reduce(raw);
                if (exact && red.size() != raw.size()) continue;
                if (red.size() > cap) continue;
                visit(std::move(red), DerivationStep{r.id, p, fwd});
            }
        }
    };

    using Map = std::unordered_map<std::vector<Letter>, Edge, VecHash>;
    Map fparent, bparent;  // fparent: state -> (previous, step prev->state); bparent: state -> (next, step state->next)
    fparent.emplace(lhs.letters(), Edge{});
    bparent.emplace(rhs.letters(), Edge{});
    std::vector<std::vector<Letter>> ffront{lhs.letters()}, bfront{rhs.letters()};
    int fdepth = 0, bdepth = 0;

    auto build = [&](const std::vector<Letter>& meet) {
        std::vector<DerivationStep> head;
        for (auto cur = meet; cur != lhs.letters();) {
            const Edge& e = fparent.at(cur);
            head.push_back(e.step);
            cur = e.other;
        }
        std::reverse(head.begin(), head.end());
        for (auto cur = meet; cur != rhs.letters();) {
            const Edge& e = bparent.at(cur);
            head.push_back(e.step);
            cur = e.other;
        }
        out.steps = std::move(head);
        return out;
    };

    while (fdepth + bdepth < cfg.max_steps && !ffront.empty() && !bfront.empty()) {
        if (fparent.size() + bparent.size() > cfg.max_states) return std::nullopt;
        bool forward = ffront.size() <= bfront.size();
        std::vector<std::vector<Letter>> next;
        std::optional<std::vector<Letter>> meet;
        if (forward) {
            for (const auto& w : ffront) {
                neighbours(w, false, [&](std::vector<Letter> v, DerivationStep s) {
                    if (meet || fparent.count(v)) return;
                    fparent.emplace(v, Edge{w, s});
                    if (bparent.count(v)) meet = v;
                    next.push_back(std::move(v));
                });
                if (meet) return build(*meet);
            }
            ffront = std::move(next);
            ++fdepth;
        } else {
            for (const auto& w : bfront) {
                neighbours(w, true, [&](std::vector<Letter> v, DerivationStep s) {
                    if (meet || bparent.count(v)) return;
                    bparent.emplace(v, Edge{w, DerivationStep{s.rule, s.pos, !s.forward}});
                    if (fparent.count(v)) meet = v;
                    next.push_back(std::move(v));
                });
                if (meet) return build(*meet);
            }
            bfront = std::move(next);
            ++bdepth;
        }
    }
    return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

DerivationScript parse_script(const std::string& text) {
    DerivationScript s;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_start = false, have_end = false;
    std::vector<std::pair<std::size_t, std::string>> checks;
    std::string start_text, end_text;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("script line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto colon = t.find(':');
        if (colon == std::string::npos) fail("expected '<key>: <value>'");
        std::string key = t.substr(0, colon), val = trim(t.substr(colon + 1));
        if (have_end) fail("content after end");
        if (key == "genus") {
            try {
                s.genus = std::stoi(val);
            } catch (const std::exception&) {
                fail("bad genus");
            }
        } else if (key == "start") {
            if (have_start) fail("duplicate start");
            start_text = val;
            have_start = true;
        } else if (key == "step") {
            if (!have_start) fail("step before start");
            std::istringstream ls(val);
            std::string rule, at, dir;
            long long pos = -1;
            if (!(ls >> rule >> at >> pos >> dir) || at != "@" || pos < 0 || (dir != "fwd" && dir != "bwd"))
                fail("expected 'step: <rule> @ <pos> fwd|bwd'");
            s.steps.push_back({rule, static_cast<std::size_t>(pos), dir == "fwd"});
        } else if (key == "check") {
            checks.emplace_back(s.steps.size(), val);
        } else if (key == "end") {
            end_text = val;
            have_end = true;
        } else {
            fail("unknown key " + key);
        }
    }
    if (!have_start || !have_end) throw std::invalid_argument("script: missing start or end");
    if (s.genus == 0) s.genus = 2;
    s.start = expand_expression(start_text, s.genus);
    s.end = expand_expression(end_text, s.genus);
    for (auto& [k, w] : checks) s.checks.push_back({k, expand_expression(w, s.genus)});
    return s;
}

DerivationScript load_script_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open script " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_script(ss.str());
}

std::string format_script(const DerivationScript& script) {
    Alphabet a = mc_alphabet(script.genus);
    std::ostringstream os;
    os << "genus: " << script.genus << "\n";
    os << "start: " << render(script.start, a) << "\n";
    auto checks_at = [&](std::size_t k) {
        for (const auto& c : script.checks)
            if (c.after == k) os << "check: " << render(c.word, a) << "\n";
    };
    checks_at(0);
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        const auto& st = script.steps[i];
        os << "step: " << st.rule << " @ " << st.pos << (st.forward ? " fwd" : " bwd") << "\n";
        checks_at(i + 1);
    }
    os << "end: " << render(script.end, a) << "\n";
    return os.str();
}

std::string substitute_symbol(const std::string& text, const std::string& label, const std::string& replacement) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            if (text.compare(i, j - i, "d") == 0 && j < text.size() && text[j] == '(') {
                std::size_t close = text.find(')', j);
                if (close == std::string::npos) throw std::invalid_argument("unbalanced d(i,j) in " + text);
                j = close + 1;
            }
            std::string tok = text.substr(i, j - i);
            std::string norm = tok;
            norm.erase(std::remove(norm.begin(), norm.end(), ' '), norm.end());
            out += norm == label ? "(" + replacement + ")" : tok;
            i = j;
        } else {
            out += c;
            ++i;
        }
    }
    return out;
}

namespace {

bool mentions(const std::string& text, const std::string& label) {
    return substitute_symbol(text, label, "#") != text;
}

std::optional<std::size_t> defining_relator(const Presentation& p, const std::string& gen) {
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        const Relator& r = p.relators[i];
        if (trim(r.lhs) == gen && !mentions(r.rhs, gen)) return i;
    }
    return std::nullopt;
}

}  // namespace

Presentation tietze(const Presentation& pres, const TietzeMove& move) {
    Presentation p = pres;
    switch (move.kind) {
        case TietzeMove::Kind::AddRelator: {
            Relator r = move.relator;
            // Generators added with definitions are substituted before certification.
            for (const auto& g : p.generators) {
                if (is_known_symbol(g, p.genus)) continue;
                if (auto d = defining_relator(p, g)) {
                    r.lhs = substitute_symbol(r.lhs, g, p.relators[*d].rhs);
                    r.rhs = substitute_symbol(r.rhs, g, p.relators[*d].rhs);
                }
            }
            CheckResult c = check_relator(r, load_twist_table(p.genus), Rep::Pi1);
            if (c.status != CheckResult::Status::Holds)
                throw TietzeError("relator " + move.relator.id + " has no valid certificate (" + status_name(c.status) +
                                  (c.reason.empty() ? "" : ": " + c.reason) + ")");
            p.relators.push_back(move.relator);
            break;
        }
        case TietzeMove::Kind::AddGenerator: {
            if (std::find(p.generators.begin(), p.generators.end(), move.generator) != p.generators.end())
                throw TietzeError("generator " + move.generator + " already present");
            if (mentions(move.definition, move.generator)) throw TietzeError("definition mentions the new generator");
            p.generators.push_back(move.generator);
            Relator r;
            r.id = "def." + move.generator;
            r.tag = "def";
            r.lhs = move.generator;
            r.rhs = move.definition;
            p.relators.push_back(std::move(r));
            break;
        }
        case TietzeMove::Kind::RemoveGenerator: {
            auto it = std::find(p.generators.begin(), p.generators.end(), move.generator);
            if (it == p.generators.end()) throw TietzeError("generator " + move.generator + " not present");
            auto d = defining_relator(p, move.generator);
            if (!d) throw TietzeError("generator " + move.generator + " has no defining relator");
            std::string def = p.relators[*d].rhs;
            p.generators.erase(it);
            p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(*d));
            for (auto& r : p.relators) {
                r.lhs = substitute_symbol(r.lhs, move.generator, def);
                r.rhs = substitute_symbol(r.rhs, move.generator, def);
            }
            break;
        }
    }
    return p;
}

}  // namespace mcg
