#include "mcgkit/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "mcgkit/expr.hpp"

namespace mcg {

namespace {

std::string num(int i) { return std::to_string(i); }
std::string A(int i) { return "a" + num(i); }
std::string E(int i) { return i == 0 ? std::string("b1") : "e" + num(i); }
std::string T(int i) { return "t" + num(i); }
std::string D(int i, int j) { return "d(" + num(i) + "," + num(j) + ")"; }

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!s.empty()) s += ' ';
        s += p;
    }
    return s;
}

// Parenthesize when the text is more than one token.
std::string par(const std::string& x) {
    bool simple = x.find(' ') == std::string::npos && x.find('*') == std::string::npos;
    return simple ? x : "(" + x + ")";
}

// t_from t_{from-1} ... t_to (empty when from < to); inverted letters when inv.
std::string t_run_down(int from, int to, bool inv) {
    std::vector<std::string> p;
    for (int k = from; k >= to; --k) p.push_back(T(k) + (inv ? "'" : ""));
    return join(p);
}

std::string t_run_up(int from, int to) {
    std::vector<std::string> p;
    for (int k = from; k <= to; ++k) p.push_back(T(k));
    return join(p);
}

// b1 a1 e1 a2 ... a_g
std::string chain_word(int g) {
    std::vector<std::string> p{"b1", "a1"};
    for (int i = 1; i < g; ++i) {
        p.push_back(E(i));
        p.push_back(A(i + 1));
    }
    return join(p);
}

// a_g e_{g-1} a_{g-1} ... e1 a1 (b1 when with_b1)
std::string chain_down(int g, bool with_b1) {
    std::vector<std::string> p;
    for (int i = g; i >= 1; --i) {
        p.push_back(A(i));
        if (i > 1) p.push_back(E(i - 1));
    }
    if (with_b1) p.push_back("b1");
    return join(p);
}

// c_from ... c_to over the chain c_1 = b1, c_2 = a1, c_3 = e1, ...
std::string chain_letter(int m) {
    if (m == 1) return "b1";
    return m % 2 == 0 ? A(m / 2) : E((m - 1) / 2);
}

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto r = std::from_chars(s.data(), s.data() + s.size(), out);
    return r.ec == std::errc() && r.ptr == s.data() + s.size();
}

// Splits "<prefix><int>" for the given prefix.
bool indexed(const std::string& label, const std::string& prefix, int& idx) {
    if (label.size() <= prefix.size() || label.compare(0, prefix.size(), prefix) != 0) return false;
    std::string_view rest(label);
    rest.remove_prefix(prefix.size());
    if (rest[0] == '0' || rest[0] == '-' || rest[0] == '+') return false;
    return parse_int(rest, idx);
}

bool parse_dij(const std::string& label, int& i, int& j) {
    if (label.size() < 6 || label.compare(0, 2, "d(") != 0 || label.back() != ')') return false;
    auto comma = label.find(',');
    if (comma == std::string::npos) return false;
    return parse_int(std::string_view(label).substr(2, comma - 2), i) &&
           parse_int(std::string_view(label).substr(comma + 1, label.size() - comma - 2), j);
}

[[noreturn]] void bad(const std::string& label, int g, const std::string& why) {
    throw std::invalid_argument("symbol '" + label + "' " + why + " at genus " + num(g));
}

bool in_range(int i, int lo, int hi) { return i >= lo && i <= hi; }

// Conjugator and base of d(i,j) following the five index cases.
std::pair<std::string, std::string> dij_structure(int i, int j) {
    if (i == 1 && j == 2) return {"b1' a1' e1' a2'", "b2"};
    if (i + j == 0) {
        if (j == 1) return {"", "sep"};
        std::vector<std::string> p;
        for (int m = j - 1; m >= 1; --m) {
            p.push_back(T(m) + "'");
            p.push_back(D(m, m + 1));
        }
        return {join(p), "sep"};
    }
    std::string c;
    if (i > 0)
        c = join({t_run_down(i - 1, 1, false), t_run_down(j - 1, 2, false)});
    else if (j > 0 && i + j > 0)
        c = join({t_run_down(-i - 1, 1, true), "s'", t_run_down(j - 1, 2, false)});
    else if (j > 0)
        c = join({t_run_down(-i - 1, 1, true), "s'", t_run_down(j, 2, false)});
    else
        c = join({t_run_down(-j - 1, 1, true), t_run_down(-i - 1, 2, true), "s' t1' s'"});
    return {c, "d(1,2)"};
}

std::string conj_text(const std::string& c, const std::string& base) {
    if (c.empty()) return base;
    return "(" + c + ") * " + base;
}

}  // namespace

std::string Relator::display() const {
    std::string l = mirror_lhs ? "mirror(" + lhs + ")" : lhs;
    if (kind == Kind::BoundaryTwist) return l + " = conjugation by boundary";
    return l + " = " + rhs;
}

std::vector<int> index_set(int g) {
    std::vector<int> v;
    for (int i = -g; i <= g; ++i)
        if (i != 0) v.push_back(i);
    return v;
}

std::string IndexPair::label() const { return D(i, j); }

std::vector<IndexPair> index_pairs(int g) {
    std::vector<IndexPair> out;
    auto I = index_set(g);
    for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = a + 1; b < I.size(); ++b) out.push_back({I[a], I[b]});
    return out;
}

std::string Move::text() const {
    switch (kind) {
        case Kind::T: return T(k);
        case Kind::TInv: return T(k) + "'";
        case Kind::S: return "s";
        case Kind::SInv: return "s'";
        case Kind::TD: return T(k) + "' " + D(k, k + 1);
    }
    return {};
}

std::vector<Move> all_moves(int g) {
    std::vector<Move> m{{Move::Kind::S, 0}, {Move::Kind::SInv, 0}};
    for (int k = 1; k < g; ++k) {
        m.push_back({Move::Kind::T, k});
        m.push_back({Move::Kind::TInv, k});
        m.push_back({Move::Kind::TD, k});
    }
    return m;
}

std::optional<IndexPair> index_action(const Move& m, IndexPair p, int g) {
    auto valid = [&](int i) { return i != 0 && i >= -g && i <= g; };
    if (!valid(p.i) || !valid(p.j) || p.i >= p.j) throw std::invalid_argument("index_action: invalid pair");
    const int k = m.k;
    if ((m.kind == Move::Kind::T || m.kind == Move::Kind::TInv || m.kind == Move::Kind::TD) && !(k >= 1 && k < g))
        throw std::invalid_argument("index_action: move index out of range");

    std::map<int, int> to;
    std::set<int> forbidden;
    std::set<IndexPair> fixed;
    switch (m.kind) {
        case Move::Kind::T:
            to = {{k, k + 1}, {-k - 1, -k}};
            forbidden = {k + 1, -k};
            fixed = {{k, k + 1}, {-k - 1, -k}};
            break;
        case Move::Kind::TInv:
            to = {{k + 1, k}, {-k, -k - 1}};
            forbidden = {k, -k - 1};
            fixed = {{k, k + 1}, {-k - 1, -k}};
            break;
        case Move::Kind::S:
            to = {{-1, 1}};
            forbidden = {1};
            fixed = {{-1, 1}};
            break;
        case Move::Kind::SInv:
            to = {{1, -1}};
            forbidden = {-1};
            fixed = {{-1, 1}};
            break;
        case Move::Kind::TD:
            to = {{k, k + 1}, {-k, -k - 1}};
            forbidden = {k + 1, -k - 1};
            fixed = {{k, k + 1}, {-k - 1, -k}};
            break;
    }
    if (fixed.count(p)) return p;
    if (forbidden.count(p.i) || forbidden.count(p.j)) return std::nullopt;
    auto f = [&](int x) {
        auto it = to.find(x);
        return it == to.end() ? x : it->second;
    };
    int a = f(p.i), b = f(p.j);
    if (a > b) std::swap(a, b);
    return IndexPair{a, b};
}

std::optional<std::string> symbol_definition(const std::string& label, int g) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    int i = 0, j = 0;
    if (label == "b1") return std::nullopt;
    if (label == "b2") {
        if (g < 2) bad(label, g, "is undefined");
        return std::nullopt;
    }
    if (indexed(label, "a", i)) {
        if (!in_range(i, 1, g)) bad(label, g, "is out of range");
        return std::nullopt;
    }
    if (indexed(label, "e", i)) {
        if (!in_range(i, 1, g - 1)) bad(label, g, "is out of range");
        return std::nullopt;
    }
    if (label == "s") return "b1 a1 a1 b1";
    if (label == "r") return "a1 b1 a1";
    if (indexed(label, "tt", i)) {
        if (!in_range(i, 1, g - 1)) bad(label, g, "is out of range");
        return join({A(i), E(i - 1), E(i), A(i)});
    }
    if (indexed(label, "t", i)) {
        if (!in_range(i, 1, g - 1)) bad(label, g, "is out of range");
        return join({E(i), A(i), A(i + 1), E(i)});
    }
    if (parse_dij(label, i, j)) {
        if (!(i < j && i != 0 && j != 0 && std::abs(i) <= g && std::abs(j) <= g)) bad(label, g, "has invalid indices");
        auto [c, base] = dij_structure(i, j);
        if (base == "sep") return conj_text(c, "(s^2 a1^4)");
        if (i == 1 && j == 2 && g < 2) bad(label, g, "is undefined");
        return conj_text(c, base);
    }
    if (indexed(label, "k", i)) {
        switch (i) {
            case 1: return "a1";
            case 2: return "d(1,2)";
            case 3: return "a1' a2^-2 d(1,2) d(-2,1) d(-2,2)";
            case 4:
                if (g < 3) bad(label, g, "is undefined");
                return "a1' a2' a3' d(1,2) d(1,3) d(2,3)";
            case 5: return "a2 t1 d(1,2)'";
            case 6: return "a1 t1";
            default: bad(label, g, "is unknown");
        }
    }
    if (indexed(label, "db", i)) {
        if (!in_range(i, 2, g)) bad(label, g, "is out of range");
        std::vector<std::string> p;
        for (int m = i - 1; m >= 1; --m) p.push_back("u" + num(m));
        return conj_text(join(p), "b1");
    }
    if (indexed(label, "d", i)) {
        if (!in_range(i, 2, g)) bad(label, g, "is out of range");
        if (i == 2) return "d(1,2)";
        return conj_text(join({"b2 a2 e1 b1'", t_run_up(2, i - 1)}), "d" + num(i - 1));
    }
    if (indexed(label, "u", i)) {
        if (!in_range(i, 1, g - 1)) bad(label, g, "is out of range");
        if (i == 1) return "(b1 a1 e1 a2)' v1 a2 e1 a1";
        return "(" + join({E(i - 1), A(i), E(i), A(i + 1)}) + ")' v" + num(i) + " " + join({A(i + 1), E(i), A(i)});
    }
    if (indexed(label, "v", i)) {
        if (!in_range(i, 1, g - 1)) bad(label, g, "is out of range");
        if (i == 1) return "w1 * b2";
        return "(tt" + num(i - 1) + "' tt" + num(i) + "') * v" + num(i - 1);
    }
    if (label == "ut" || label == "vt" || label == "dt3") {
        if (g < 3) bad(label, g, "is undefined");
        if (label == "ut") return "e2' a3' tt2' b2 tt2 a3 e2";
        if (label == "vt") return "(a2 e1 a1 b1)' * b2";
        return "(a3 e2 a2 e1 a1 ut) * vt";
    }
    if (label == "w0") return chain_down(g, true);
    if (label == "w1") {
        if (g < 2) bad(label, g, "is undefined");
        return "a2 e1 a1 b1^2 a1 e1 a2";
    }
    if (label == "w2") {
        if (g < 3) bad(label, g, "is undefined");
        return "e2 a2 e1 a1^2 e1 a2 e2";
    }
    if (label == "Delta") return "(" + chain_word(g) + ")^" + num(4 * g + 2);
    throw std::invalid_argument("unknown symbol '" + label + "'");
}

bool is_known_symbol(const std::string& label, int g) {
    try {
        symbol_definition(label, g);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

namespace {

struct ExpandAlgebra {
    using value_type = Word;
    int g;
    Alphabet alphabet;
    std::map<std::string, Word> memo;

    Word one() const { return Word(); }
    Word mul(const Word& a, const Word& b) const { return concat(a, b); }
    Word pow(const Word& a, long long n) const { return power(a, n); }
    Word inv(const Word& a) const { return invert(a); }
    Word conj(const Word& a, const Word& b) const { return conjugate(a, b); }
    Word symbol(const std::string& label) {
        if (auto it = memo.find(label); it != memo.end()) return it->second;
        auto def = symbol_definition(label, g);
        Word w = def ? parse_with(*def, *this) : Word{make_letter(alphabet.find(label), 1)};
        memo.emplace(label, w);
        return w;
    }
};

// Smallest genus at which every symbol of an expression is defined.
struct GenusAlgebra {
    using value_type = int;
    std::map<std::string, int>& memo;
    int one() const { return 1; }
    int mul(int a, int b) const { return std::max(a, b); }
    int pow(int a, long long) const { return a; }
    int inv(int a) const { return a; }
    int conj(int a, int b) const { return std::max(a, b); }
    int symbol(const std::string& label) {
        if (auto it = memo.find(label); it != memo.end()) return it->second;
        for (int g = 1; g <= 16; ++g) {
            std::optional<std::string> def;
            try {
                def = symbol_definition(label, g);
            } catch (const std::invalid_argument&) {
                continue;
            }
            int need = def ? parse_with(*def, *this) : g;
            if (need <= g) {
                memo[label] = g;
                return g;
            }
        }
        throw std::invalid_argument("unknown symbol '" + label + "'");
    }
};

int needed_genus(const std::string& text) {
    static std::mutex mu;
    static std::map<std::string, int> memo;
    std::lock_guard<std::mutex> lock(mu);
    GenusAlgebra alg{memo};
    return parse_with(text, alg);
}

}  // namespace

Word expand_symbol(const std::string& label, int g) {
    ExpandAlgebra alg{g, mc_alphabet(g), {}};
    return alg.symbol(label);
}

Word expand_expression(const std::string& text, int g) {
    ExpandAlgebra alg{g, mc_alphabet(g), {}};
    return parse_with(text, alg);
}

Word mirror(const Word& w) {
    std::vector<Letter> l = w.letters();
    for (auto& x : l) x = -x;
    return Word(std::move(l));
}

std::optional<std::pair<std::string, std::string>> twist_structure(const std::string& label, int g) {
    symbol_definition(label, g);  // range check
    int i = 0, j = 0;
    if (parse_dij(label, i, j)) return dij_structure(i, j);
    if (indexed(label, "db", i)) {
        std::vector<std::string> p;
        for (int m = i - 1; m >= 1; --m) p.push_back("u" + num(m));
        return std::make_pair(join(p), std::string("b1"));
    }
    if (label != "d" && indexed(label, "d", i)) {
        if (i == 2) return std::make_pair(std::string(), std::string("d(1,2)"));
        return std::make_pair(join({"b2 a2 e1 b1'", t_run_up(2, i - 1)}), "d" + num(i - 1));
    }
    if (indexed(label, "v", i)) {
        if (i == 1) return std::make_pair(std::string("w1"), std::string("b2"));
        return std::make_pair("tt" + num(i - 1) + "' tt" + num(i) + "'", "v" + num(i - 1));
    }
    if (label == "vt") return std::make_pair(std::string("(a2 e1 a1 b1)'"), std::string("b2"));
    if (label == "dt3") return std::make_pair(std::string("a3 e2 a2 e1 a1 ut"), std::string("vt"));
    if (label == "k2") return std::make_pair(std::string(), std::string("d(1,2)"));
    return std::nullopt;
}

std::vector<std::string> twist_symbols(int g) {
    std::vector<std::string> out;
    for (const auto& p : index_pairs(g)) {
        if (p.i == 1 && p.j == 2 && g < 2) continue;
        if (g < 2 && !(p.i == -1 && p.j == 1)) continue;
        out.push_back(p.label());
    }
    for (int i = 2; i <= g; ++i) out.push_back("d" + num(i));
    for (int i = 2; i <= g; ++i) out.push_back("db" + num(i));
    for (int i = 1; i < g; ++i) out.push_back("v" + num(i));
    if (g >= 3) {
        out.push_back("vt");
        out.push_back("dt3");
    }
    return out;
}

HomologyClass symbol_class(const TwistTable& table, const std::string& label) {
    const int g = table.genus();
    auto st = twist_structure(label, g);
    if (!st) {
        if (!symbol_definition(label, g)) return table.entry(label).cls;
        throw std::invalid_argument("symbol '" + label + "' is not a Dehn twist");
    }
    if (st->second == "sep") return HomologyClass(g);
    HomologyClass base = symbol_class(table, st->second);
    if (st->first.empty()) return base;
    HomologyClass c = table.sp(expand_expression(st->first, g)) * base;
    for (const auto& x : c.coeffs) {
        if (x == 0) continue;
        if (x < 0) c = -c;
        break;
    }
    return c;
}

// --- relator families ---------------------------------------------------

namespace {

struct Builder {
    int g;
    std::vector<Relator> out;

    static Relator make(std::string id, std::string tag, std::string lhs, std::string rhs) {
        Relator r;
        r.id = std::move(id);
        r.tag = std::move(tag);
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        return r;
    }
    void eq(std::string id, std::string tag, std::string lhs, std::string rhs) {
        push(make(std::move(id), std::move(tag), std::move(lhs), std::move(rhs)));
    }
    void comm(std::string id, std::string tag, const std::string& u, const std::string& v) {
        eq(std::move(id), std::move(tag), par(u) + " " + par(v), par(v) + " " + par(u));
    }
    void braid(std::string id, std::string tag, const std::string& u, const std::string& v) {
        eq(std::move(id), std::move(tag), u + " " + v + " " + u, v + " " + u + " " + v);
    }
    void sp_only(std::string id, std::string tag, std::string lhs, std::string rhs) {
        Relator r = make(std::move(id), std::move(tag), std::move(lhs), std::move(rhs));
        r.sp_only = true;
        push(std::move(r));
    }
    void sp_only_comm(std::string id, std::string tag, const std::string& u, const std::string& v) {
        sp_only(std::move(id), std::move(tag), par(u) + " " + par(v), par(v) + " " + par(u));
    }
    void mirror_eq(std::string id, std::string tag, std::string lhs, std::string rhs) {
        Relator r = make(std::move(id), std::move(tag), std::move(lhs), std::move(rhs));
        r.mirror_lhs = true;
        push(std::move(r));
    }
    void boundary(std::string id, std::string tag, std::string lhs) {
        Relator r;
        r.id = std::move(id);
        r.tag = std::move(tag);
        r.lhs = std::move(lhs);
        r.kind = Relator::Kind::BoundaryTwist;
        push(std::move(r));
    }
    void push(Relator r) {
        int need = 0;
        try {
            need = needed_genus(r.lhs);
            if (!r.rhs.empty()) need = std::max(need, needed_genus(r.rhs));
        } catch (const ParseError&) {
            return;  // some symbol has no meaning at this genus
        }
        r.min_genus = need;
        if (need <= g) out.push_back(std::move(r));
    }
};

bool p2a_condition(int r, int s, int i, int j) { return (r < s && s < i && i < j) || (i < r && r < s && s < j); }

void add_pure_braid(Builder& b, const std::vector<int>& holes, const std::string& tag,
                    const std::function<std::string(int, int)>& name) {
    const std::size_t n = holes.size();
    auto id = [&](const std::string& sub, std::initializer_list<int> idx) {
        std::string s = tag + sub;
        char sep = '.';
        for (int x : idx) {
            s += sep + num(x);
            sep = ',';
        }
        return s;
    };
    for (int r : holes)
        for (int s : holes)
            for (int i : holes)
                for (int j : holes)
                    if (p2a_condition(r, s, i, j))
                        b.eq(id("a", {r, s, i, j}), tag + "a", name(r, s) + "' * " + name(i, j), name(i, j));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            for (std::size_t z = y + 1; z < n; ++z) {
                int r = holes[x], s = holes[y], j = holes[z];
                b.eq(id("b", {r, s, j}), tag + "b", name(r, s) + "' * " + name(s, j), name(r, j) + " * " + name(s, j));
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            for (std::size_t z = y + 1; z < n; ++z) {
                int r = holes[x], s = holes[y], j = holes[z];
                b.eq(id("c", {r, s, j}), tag + "c", name(r, j) + "' * " + name(r, s), name(s, j) + " * " + name(r, s));
            }
    for (int r : holes)
        for (int i : holes)
            for (int s : holes)
                for (int j : holes)
                    if (r < i && i < s && s < j)
                        b.comm(id("d", {r, i, s, j}), tag + "d", name(i, j), name(r, j) + "' * " + name(r, s));
}

void add_P(Builder& b, const std::string& fam) {
    const int g = b.g;
    auto I = index_set(g);
    auto pairs = index_pairs(g);
    if (fam == "P1") {
        for (int i = 1; i <= g; ++i)
            for (int j = i + 1; j <= g; ++j) b.comm("P1." + A(i) + "." + A(j), "P1", A(i), A(j));
        for (int i = 1; i <= g; ++i)
            for (const auto& p : pairs) b.comm("P1." + A(i) + "." + p.label(), "P1", A(i), p.label());
    } else if (fam.size() == 3 && fam.compare(0, 2, "P2") == 0) {
        Builder sub{g, {}};
        add_pure_braid(sub, I, "P2", [](int i, int j) { return D(i, j); });
        for (auto& r : sub.out)
            if (r.tag == fam) b.out.push_back(std::move(r));
    } else if (fam == "P2") {
        add_pure_braid(b, I, "P2", [](int i, int j) { return D(i, j); });
    } else if (fam == "P3") {
        for (int i = 1; i <= g - 2; ++i) b.braid("P3." + T(i) + "." + T(i + 1), "P3", T(i), T(i + 1));
        for (int i = 1; i < g; ++i)
            for (int j = i + 2; j <= g - 1; ++j) b.comm("P3." + T(i) + "." + T(j), "P3", T(i), T(j));
    } else if (fam == "P4") {
        b.eq("P4.s", "P4", "s^2", "d(-1,1) a1^-4");
        for (int i = 1; i < g; ++i)
            b.eq("P4." + T(i), "P4", T(i) + "^2",
                 join({D(i, i + 1), D(-i - 1, -i), A(i) + "^-2", A(i + 1) + "^-2"}));
    } else if (fam == "P5") {
        for (int i = 2; i < g; ++i) b.comm("P5." + T(i), "P5", T(i), "s");
    } else if (fam == "P6") {
        b.eq("P6", "P6", "s t1 s t1", "t1 s t1 s");
    } else if (fam == "P7") {
        for (int i = 1; i <= g; ++i) b.comm("P7.s." + A(i), "P7", "s", A(i));
        for (int i = 1; i < g; ++i) b.eq("P7." + T(i) + "*" + A(i), "P7", T(i) + " * " + A(i), A(i + 1));
        for (int i = 1; i <= g; ++i)
            for (int j = 1; j < g; ++j)
                if (j != i && j != i - 1) b.comm("P7." + A(i) + "." + T(j), "P7", A(i), T(j));
    } else if (fam == "P8") {
        for (const auto& p : pairs) {
            auto q = index_action({Move::Kind::S, 0}, p, g);
            if (q) b.eq("P8.s*" + p.label(), "P8", "s * " + p.label(), q->label());
        }
        for (int k = 1; k < g; ++k)
            for (const auto& p : pairs) {
                auto q = index_action({Move::Kind::T, k}, p, g);
                if (q)
                    b.eq("P8." + T(k) + "*" + p.label(), "P8", T(k) + " * " + p.label(), q->label());
                else if (p.i == -k - 1 && p.j == k + 1)
                    b.eq("P8." + T(k) + "*" + p.label(), "P8", T(k) + " * " + p.label(),
                         D(k, k + 1) + " * " + D(-k, k));
            }
    } else if (fam == "P9") {
        std::vector<std::string> others{"a1^2 s", "t1 s t1", "a2", "d(2,3)", "d(-2,2)",
                                        "d(-1,1) d(-1,2) d(1,2) a1^-2 a2'"};
        for (int i = 2; i < g; ++i) others.push_back(T(i));
        int n = 0;
        for (const auto& x : others) b.comm("P9." + num(++n), "P9", "r", x);
    } else if (fam == "P10") {
        b.eq("P10", "P10", "r^2", "s a1^2");
    } else if (fam == "P11") {
        for (int i = 1; i <= 4; ++i)
            b.eq("P11.k" + num(i), "P11", "(k" + num(i) + " r)^3", "(k" + num(i) + " s a1)^2");
        b.eq("P11.k5", "P11", "(r k5 r k5')^2", "s a1^2 k5 s a1^2 k5'");
        b.eq("P11.k6", "P11", "(r a1 t1)^5", "(s a1^2 t1)^4");
    } else {
        throw std::invalid_argument("unknown relator family " + fam);
    }
}

std::string m4_word(int g) {
    return chain_word(g) + " " + A(g) + " " + [&] {
        std::vector<std::string> p;
        for (int i = g - 1; i >= 1; --i) {
            p.push_back(E(i));
            p.push_back(A(i));
        }
        p.push_back("b1");
        return join(p);
    }();
}

// a_g e_{g-1} ... e1 a1 b1^2 a1 e1 ... e_{g-1} a_g
std::string d_word(int g) {
    std::vector<std::string> p;
    for (int i = g; i >= 1; --i) {
        p.push_back(A(i));
        if (i > 1) p.push_back(E(i - 1));
    }
    p.push_back("b1^2");
    for (int i = 1; i <= g; ++i) {
        p.push_back(A(i));
        if (i < g) p.push_back(E(i));
    }
    return join(p);
}

void add_M(Builder& b, bool m3, bool m4) {
    for (auto& r : expand_M1(b.g)) b.out.push_back(std::move(r));
    b.eq("M2", "M2", "(b1 a1 e1 a2)^5", "b2 a2 e1 a1 b1^2 a1 e1 a2 b2");
    if (m3) b.eq("M3", "M3", "d3 a1 a2 a3", "d(1,2) d(1,3) d(2,3)");
    if (m4) b.comm("M4", "M4", m4_word(b.g), "d" + num(b.g));
}

void add_ABCD(Builder& b, bool c, bool d) {
    for (auto& r : expand_M1(b.g)) {
        r.id = "A" + r.id.substr(2);
        r.tag = "A";
        b.out.push_back(std::move(r));
    }
    b.eq("B", "B", "(b1 a1 e1)^4", "((a2 e1 a1 b1^2 a1 e1 a2) * b2) b2");
    if (c) b.eq("C", "C", "e2 e1 b1 dt3", "tt1' tt2' b2 tt2 tt1 tt2' b2 tt2 b2");
    if (d) b.comm("D", "D", d_word(b.g), "db" + num(b.g));
}

}  // namespace

std::vector<Relator> expand_M1(int g) {
    Builder b{g, {}};
    Alphabet a = mc_alphabet(g);
    auto braided = [&](std::size_t i, std::size_t j) {
        const std::string &u = a.name(i), &v = a.name(j);
        if (u == "b2" || v == "b2") return u == "a2" || v == "a2";
        return (i > j ? i - j : j - i) == 1;
    };
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = i + 1; j < a.rank(); ++j) {
            std::string id = "M1." + a.name(i) + "." + a.name(j);
            if (braided(i, j))
                b.braid(id, "M1", a.name(i), a.name(j));
            else
                b.comm(id, "M1", a.name(i), a.name(j));
        }
    return b.out;
}

std::vector<Relator> expand_P_family(const std::string& family, int g) {
    if (g < 2) throw std::invalid_argument("relator families need genus at least 2");
    Builder b{g, {}};
    add_P(b, family);
    return b.out;
}

std::vector<Relator> expand_Q(int n, int g) {
    auto I = index_set(g);
    if (n < 1 || n > static_cast<int>(I.size()))
        throw std::invalid_argument("disk_holes: hole count must be between 1 and 2g");
    std::vector<int> holes(I.begin(), I.begin() + n);
    Builder b{g, {}};
    std::set<int> handles;
    for (int h : holes) handles.insert(std::abs(h));
    for (int x : handles)
        for (int y : handles)
            if (x < y) b.comm("Q1." + A(x) + "." + A(y), "Q1", A(x), A(y));
    for (int x : handles)
        for (std::size_t p = 0; p < holes.size(); ++p)
            for (std::size_t q = p + 1; q < holes.size(); ++q)
                b.comm("Q1." + A(x) + "." + D(holes[p], holes[q]), "Q1", A(x), D(holes[p], holes[q]));
    add_pure_braid(b, holes, "Q2", [](int i, int j) { return D(i, j); });
    return b.out;
}

std::vector<std::string> presentation_names() {
    return {"thm1", "thm1p", "thm2", "thm3", "thm3p", "H_stab", "G_full", "disk_holes"};
}

Presentation presentation(const std::string& name, int g) {
    Presentation p;
    p.genus = g;
    p.name = name;
    Builder b{g, {}};
    auto mc_gens = [&] { return mc_alphabet(g).names(); };
    auto h_gens = [&] {
        std::vector<std::string> v;
        for (int i = 1; i <= g; ++i) v.push_back(A(i));
        v.push_back("s");
        for (int i = 1; i < g; ++i) v.push_back(T(i));
        for (const auto& q : index_pairs(g)) v.push_back(q.label());
        return v;
    };
    if (name == "thm1") {
        if (g < 3) throw std::invalid_argument("thm1 needs genus at least 3");
        p.generators = mc_gens();
        add_M(b, true, false);
    } else if (name == "thm2") {
        if (g != 2) throw std::invalid_argument("thm2 is stated for genus 2");
        p.generators = mc_gens();
        add_M(b, false, false);
    } else if (name == "thm3") {
        if (g < 2) throw std::invalid_argument("thm3 needs genus at least 2");
        p.generators = mc_gens();
        add_M(b, g >= 3, true);
    } else if (name == "thm1p") {
        if (g < 2) throw std::invalid_argument("thm1p needs genus at least 2");
        p.generators = mc_gens();
        add_ABCD(b, g >= 3, false);
    } else if (name == "thm3p") {
        if (g < 2) throw std::invalid_argument("thm3p needs genus at least 2");
        p.generators = mc_gens();
        add_ABCD(b, g >= 3, true);
    } else if (name == "H_stab" || name == "G_full") {
        if (g < 2) throw std::invalid_argument(name + " needs genus at least 2");
        p.generators = h_gens();
        for (const char* f : {"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8"}) add_P(b, f);
        if (name == "G_full") {
            p.generators.push_back("r");
            for (const char* f : {"P9", "P10", "P11"}) add_P(b, f);
        }
    } else if (name.rfind("disk_holes", 0) == 0) {
        int n = 2 * g;
        if (name != "disk_holes") {
            int v = 0;
            if (name.size() < 13 || name[10] != '(' || name.back() != ')' ||
                !parse_int(std::string_view(name).substr(11, name.size() - 12), v))
                throw std::invalid_argument("unknown presentation " + name);
            n = v;
        }
        p.name = "disk_holes(" + num(n) + ")";
        b.out = expand_Q(n, g);
        auto I = index_set(g);
        std::set<int> handles;
        for (int k = 0; k < n; ++k) handles.insert(std::abs(I[static_cast<std::size_t>(k)]));
        for (int h : handles) p.generators.push_back(A(h));
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                p.generators.push_back(D(I[static_cast<std::size_t>(x)], I[static_cast<std::size_t>(y)]));
    } else {
        throw std::invalid_argument("unknown presentation " + name);
    }
    p.relators = std::move(b.out);
    return p;
}

std::vector<std::pair<std::string, std::string>> dictionary_errata(int g) {
    std::vector<std::string> bottom{"d"};
    for (int k = 1; k <= g; ++k) {
        bottom.push_back("a" + num(k));
        bottom.push_back("b" + num(k));
    }
    std::vector<std::string> top{"b2", "b1", "a1"};
    for (int i = 1; i < g; ++i) {
        top.push_back(E(i));
        top.push_back(A(i + 1));
    }
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t m = 0; m < top.size(); ++m) out.emplace_back(top[m], bottom[m]);
    return out;
}

std::string export_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "presentation " << p.name << " genus " << p.genus << "\n";
    os << "gens:";
    for (const auto& gname : p.generators) os << ' ' << gname;
    os << "\n";
    for (const auto& r : p.relators) os << "rel " << r.id << " [" << r.tag << "]: " << r.lhs << " = " << r.rhs << "\n";
    return os.str();
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("presentation line " + num(lineno) + ": " + why);
    };
    bool header = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line.rfind("presentation ", 0) == 0) {
            std::istringstream ls(line.substr(13));
            std::string kw;
            if (!(ls >> p.name >> kw >> p.genus) || kw != "genus") fail("malformed header");
            header = true;
        } else if (line.rfind("gens:", 0) == 0) {
            std::istringstream ls(line.substr(5));
            std::string gname;
            while (ls >> gname) p.generators.push_back(gname);
        } else if (line.rfind("rel ", 0) == 0) {
            auto lb = line.find(" [", 4);
            auto rb = line.find("]: ", lb == std::string::npos ? 0 : lb);
            if (lb == std::string::npos || rb == std::string::npos) fail("malformed relator");
            Relator r;
            r.id = line.substr(4, lb - 4);
            r.tag = line.substr(lb + 2, rb - lb - 2);
            std::string body = line.substr(rb + 3);
            auto eqp = body.find(" = ");
            if (eqp == std::string::npos) fail("relator without ' = '");
            r.lhs = body.substr(0, eqp);
            r.rhs = body.substr(eqp + 3);
            r.min_genus = std::max(needed_genus(r.lhs), needed_genus(r.rhs));
            p.relators.push_back(std::move(r));
        } else {
            fail("unrecognized line");
        }
    }
    if (!header) throw std::invalid_argument("presentation: missing header");
    return p;
}

// --- fixtures ---------------------------------------------------------------

std::vector<std::string> fixture_sections() { return {"sec4", "sec5", "sec6", "lemma4", "lantern"}; }

namespace {

void fixtures_aux(Builder& b) {
    const int g = b.g;
    auto pairs = index_pairs(g);
    // twists t_i and s permute the a_i
    for (int i = 1; i < g; ++i) {
        b.eq("tconj." + T(i) + "." + A(i), "tconj", T(i) + " * " + A(i), A(i + 1));
        b.eq("tconj." + T(i) + "." + A(i + 1), "tconj", T(i) + " * " + A(i + 1), A(i));
        for (int k = 1; k <= g; ++k)
            if (k != i && k != i + 1) b.eq("tconj." + T(i) + "." + A(k), "tconj", T(i) + " * " + A(k), A(k));
    }
    for (int i = 1; i <= g; ++i) b.eq("tconj.s." + A(i), "tconj", "s * " + A(i), A(i));

    // conjugation by w0
    b.eq("w0.b2", "w0", "w0' * b2", "d(1,2)");
    b.eq("w0.b1", "w0", "w0' * b1", "a1");
    for (int i = 1; i < g; ++i) {
        b.eq("w0." + A(i), "w0", "w0' * " + A(i), E(i));
        b.eq("w0." + E(i), "w0", "w0' * " + E(i), A(i + 1));
    }
    b.eq("d12.b1", "d12", "d(1,2) * b1", "b1' * d(1,2)");
    b.eq("d12.e2", "d12", "d(1,2) * e2", "e2' * d(1,2)");
    for (int i = 1; i <= g; ++i) b.comm("d12." + A(i), "d12", "d(1,2)", A(i));
    for (int j = 1; j < g; ++j)
        if (j != 2) b.comm("d12." + E(j), "d12", "d(1,2)", E(j));
    for (int j = 1; j < g; ++j)
        if (j != 2) b.comm("d12." + T(j), "d12", "d(1,2)", T(j));

    // a_k fixes every d(i,j)
    for (int k = 1; k <= g; ++k)
        for (const auto& p : pairs) b.eq("aconj." + A(k) + "." + p.label(), "aconj", A(k) + " * " + p.label(), p.label());

    // relations among t_i and s
    for (int i = 1; i + 1 < g; ++i)
        b.eq("tt." + T(i) + "." + T(i + 1), "tt", T(i) + " * " + T(i + 1), T(i + 1) + "' * " + T(i));
    for (int i = 1; i < g; ++i)
        for (int k = i + 2; k < g; ++k) b.comm("tt." + T(i) + "." + T(k), "tt", T(i), T(k));
    for (int i = 2; i < g; ++i) b.comm("tt.s." + T(i), "tt", T(i), "s");

    // other words for d(i,i+1)
    for (int i = 2; i < g; ++i) {
        std::vector<std::string> c, ci;
        for (int m = i - 1; m >= 1; --m) {
            c.push_back(T(m) + " " + T(m + 1));
            ci.push_back(T(m) + "' " + T(m + 1) + "'");
        }
        b.eq("dnext." + num(i), "dnext", D(i, i + 1), "(" + join(c) + ") * d(1,2)");
        b.eq("dnext.-" + num(i), "dnext", D(-i - 1, -i), "(" + join(ci) + ") * d(-2,-1)");
        b.eq("dnext.step." + num(i), "dnext", D(i, i + 1), "(" + T(i - 1) + " " + T(i) + ") * " + D(i - 1, i));
    }
    for (int i = 1; i < g; ++i)
        for (int k = 1; k < g; ++k)
            if (std::abs(k - i) != 1)
                b.eq("dnext.fix." + T(k) + "." + D(i, i + 1), "dnext", T(k) + " * " + D(i, i + 1), D(i, i + 1));

    // w1 and the chain (b1 a1 e1)^4
    b.eq("w1.chain", "w1", "(b1 a1 e1)^4", "b2 w1 b2 w1'");
    b.eq("w1.sym", "w1", "w1 * b2", "w1' * b2");
    b.comm("w1.comm", "w1", "w1 * b2", "b2");

    // s t1 s
    b.eq("st1s.left", "st1s", "s t1 s", "b1 a1 e1 a2^2 e1 a1 b1 t1");
    b.eq("st1s.right", "st1s", "s t1 s", "t1 b1 a1 e1 a2^2 e1 a1 b1");
    b.eq("st1s.braid", "st1s", "s t1 s t1", "t1 s t1 s");

    // (a1 e1 a2)^4 and d(-2,-1)
    b.eq("chain3.t", "chain3", "(a1 e1 a2)^4", "t1^2 a1^2 a2^2");
    b.eq("chain3.d", "chain3", "t1^2 a1^2 a2^2", "d(1,2) d(-2,-1)");
    b.comm("chain3.comm", "chain3", "d(1,2)", "d(-2,-1)");
    b.eq("chain3.w2", "chain3", "d(-2,-1)", "w2 * d(1,2)");
    b.eq("chain3.w2inv", "chain3", "d(-2,-1)", "w2' * d(1,2)");
    b.eq("chain3.b2", "chain3", "d(-2,-1)", "(b1 a1 e1 a2) * b2");
    b.eq("chain3.def", "chain3", "d(-2,-1)", "(s' t1' s') * d(1,2)");

    // symmetry: letters replaced by inverses
    for (const auto& p : pairs) {
        if (p.i + p.j != 0)
            b.mirror_eq("sym." + p.label(), "sym", p.label(), D(-p.j, -p.i) + "'");
        else
            b.mirror_eq("sym." + p.label(), "sym", p.label(), p.label() + "'");
    }
    b.mirror_eq("sym.t1", "sym", "t1", "t1'");
    b.mirror_eq("sym.s", "sym", "s", "s'");

    for (int i = 1; i + 1 < g; ++i) {
        b.eq("dshift.inv." + num(i), "dshift", D(i + 1, i + 2), "(" + T(i) + "' " + T(i + 1) + "') * " + D(i, i + 1));
        b.eq("dshift." + num(i), "dshift", D(i + 1, i + 2), "(" + T(i) + " " + T(i + 1) + ") * " + D(i, i + 1));
    }
    for (int i = 1; i < g; ++i)
        b.eq("tsq." + num(i), "tsq", T(i) + "^2",
             join({D(i, i + 1), D(-i - 1, -i), A(i) + "^-2", A(i + 1) + "^-2"}));

    b.comm("b1.d(-2,2)", "b1d", "b1", "d(-2,2)");
    b.eq("b1.d(-2,2).form", "b1d", "d(-2,2)", "a2^4 d(1,2) b1 a1 e1 a2^2 e1^2 a2^2 e1 a1' b1' d(1,2)'");
    b.eq("b1.d(-2,2).t1s", "b1d", "t1' * s", "b1 a1 e1 a2^2 e1 a1' b1'");

    for (int i = 1; i + 1 < g; ++i)
        b.eq("econj." + num(i), "econj", "(" + T(i) + " " + T(i + 1) + ") * " + E(i), E(i + 1));

    for (int i = 2; i < g; ++i) b.comm("dcomm.b1." + D(i, i + 1), "dcomm", "b1", D(i, i + 1));
    for (int i = 1; i < g; ++i)
        for (int k = 1; k < g; ++k) {
            if (std::abs(k - i) != 1)
                b.comm("dcomm." + E(k) + "." + D(i, i + 1), "dcomm", E(k), D(i, i + 1));
            else
                b.eq("dcomm." + E(k) + "." + D(i, i + 1), "dcomm", D(i, i + 1) + " * " + E(k),
                     E(k) + "' * " + D(i, i + 1));
        }
    b.eq("dcomm.d23.form", "dcomm", "d(2,3)",
         "(e1' a2' e2' a3' a1' b1' e1' a1' a2' e1' e2' a2') * b2");

    b.comm("dsd.b1", "dsd", "b1", "d(1,2) s d(1,2)");
    b.comm("dsd.s", "dsd", "s", "d(1,2) s d(1,2)");
    for (int i = 1; i < g; ++i)
        for (int j = 1; j < g; ++j)
            if (std::abs(i - j) == 1) {
                std::string x = D(i, i + 1) + " " + T(j) + " " + D(i, i + 1);
                b.comm("dtd." + E(j) + "." + num(i), "dsd", E(j), x);
                b.comm("dtd." + T(j) + "." + num(i), "dsd", T(j), x);
            }
    b.eq("uvuv.1", "uvuv", "(s t1) * s", "t1' * s");
    b.eq("uvuv.2", "uvuv", "(s' t1') * s", "t1 * s");
    b.eq("uvuv.3", "uvuv", "(d(1,2) s) * d(1,2)", "s' * d(1,2)");

    // disjoint curves d(i,j)
    for (const auto& p : pairs)
        if (std::abs(p.i) != 1 && std::abs(p.j) != 1)
            b.comm("disj.d(-1,1)." + p.label(), "disj", p.label(), "d(-1,1)");
    for (int k = -g; k < g; ++k) {
        if (k == 0 || k == -1) continue;
        IndexPair q{k, k + 1};
        for (const auto& p : pairs)
            if (p.i != q.i && p.i != q.j && p.j != q.i && p.j != q.j)
                b.comm("disj." + q.label() + "." + p.label(), "disj", p.label(), q.label());
    }
    b.eq("disj.d(-3,-1).t2", "disj", "d(-3,-1)", "t2' * d(-2,-1)");
    b.eq("disj.d(-3,-1).t1", "disj", "t1 * d(-3,-2)", "d(-3,-1)");
    b.eq("disj.d(-3,-1).w2", "disj", "d(-3,-1)", "(e2' a3' a2' e2' w2) * d(1,2)");
    b.eq("disj.d(-3,-1).a1", "disj", "d(-3,-1)", "(e2' a3' e1 a1 d(1,2)' e2' a2' e1') * a1");
    b.eq("disj.d(-3,-1).a1b", "disj", "d(-3,-1)", "(e2' d(1,2)' a3' e2' e1 a1 a2' e1') * a1");
    b.eq("disj.d3.b2", "disj", "d3", "(b1' b2 a2 e1 e2 a2 a3 e2 b1' a1' e1' a2') * b2");
    b.eq("disj.d3.b1", "disj", "d3", "(b1' b2 a2 e1 e2 a2 a3 e2 b2 a2 e1 a1) * b1");
    b.comm("disj.d3.comm", "disj", "d3", "a2 e1 e2 a2 a3 e2");
    b.eq("disj.d3.alt", "disj", "d3", "(b1' ((a2 e1 e2 a2 a3 e2)' * b2) b1' a1' e1' a2') * b2");
    std::string u = "(a4 e3 a3 e2 a2 e1 a1 b1)' a3 e2 a2 e1 a1 b1";
    b.comm("disj.u.d12", "disj", "d(1,2)", u);
    b.eq("disj.u.d3", "disj", "(" + u + ") * d3",
         "(e3 a3 e2 a2 e1 ((e2 a2 a3 e2 e3 a3)' * d(1,2)) a1' e1' a2' e2') * d(1,2)");
    b.eq("disj.t2t3", "disj", "t2' t3'", "e2' a3' e3' a4' a2' e2' a3' e3'");
    b.eq("disj.e1", "disj", "(e2' a3' e3' a4') * e1", "e1");
    b.eq("disj.t3t2", "disj", "(e2' a3' e3' a4' (e2 a2 a3 e2 e3 a3)') * d(1,2)", "(t3' t2') * d(1,2)");
    b.eq("disj.a1e1t2", "disj", "(e2' a3' e3' a4' a1' e1' a2' e2') * d(1,2)", "(a1' e1' t2') * d(1,2)");
    b.eq("disj.t2d12", "disj", "t2' * d(1,2)", "t1 * d(2,3)");
    b.eq("disj.t2t3t2", "disj", "(t2' t3' t2) * d(1,2)", "(t3 t2') * d(1,2)");
    for (int k = 1; k + 2 <= g; ++k) {
        int j = k + 2;
        b.eq("disj.dmjj." + num(j), "disj", D(-j, j),
             "(" + D(k + 1, k + 2) + " " + T(k + 1) + "' " + T(k) + "' " + D(k, k + 1) + ") * " + D(-k, k));
        b.eq("disj.dmjj.alt." + num(j), "disj", D(-j, j),
             "(" + D(-k - 2, -k - 1) + "' " + T(k + 1) + " " + T(k) + " " + D(-k - 1, -k) + "') * " + D(-k, k));
    }
    b.eq("tdconj.d(-1,2)", "tdconj", "t1' * d(-1,2)", "d(-2,1)");

    // pure braid relations among the d(i,j) and the case identities
    Builder pb{g, {}};
    add_pure_braid(pb, index_set(g), "pb", [](int i, int j) { return D(i, j); });
    for (auto& r : pb.out) b.out.push_back(std::move(r));
    b.eq("pb.case1.lhs", "pbcase", "d(1,2)' * d(2,3)", "(t1' t2) * d(1,2)");
    b.eq("pb.case1.rhs", "pbcase", "d(1,3) * d(2,3)", "(t1' t2) * d(1,2)");
    b.eq("pb.case1.mid", "pbcase", "(d(1,2)' t1' t2') * d(1,2)", "(t1' t2) * d(1,2)");
    b.eq("pb.case2", "pbcase", "d(-1,1)' * d(1,2)", "d(-1,2) * d(1,2)");
    b.eq("pb.case2.mid", "pbcase", "(s' d(1,2) s) * d(1,2)", "d(-1,2) * d(1,2)");
    b.eq("pb.case3", "pbcase", "d(-2,1)' * d(1,2)", "d(-2,2) * d(1,2)");
    b.eq("pb.case3.conj", "pbcase", "(d(1,2)' t1 d(-2,2)) * d(1,2)", "s^2 * d(1,2)");
    b.eq("pb.case4", "pbcase", "d(-2,-1)' * d(-1,1)", "d(-2,1) * d(-1,1)");
    b.eq("pb.d.case1", "pbcase", "t3' * d(2,4)", "d(2,3)");
    b.eq("pb.d.case1b", "pbcase", "(t3' d(1,4)') * d(1,3)", "d(1,4)");
    b.eq("pb.d.case2", "pbcase", "(t2' d(-1,3)') * d(-1,2)", "d(-1,3)");
    b.eq("pb.d.case3", "pbcase", "(t2' d(2,3)) * d(-2,2)", "d(-3,3)");
    b.eq("pb.d.case4", "pbcase", "t1' * d(-3,2)", "d(-3,1)");
    b.eq("pb.d.case4b", "pbcase", "(t1' d(2,3)') * d(1,3)", "d(2,3)");
    b.eq("pb.d.case5", "pbcase", "s' * d(-2,1)", "d(-2,-1)");
    b.eq("pb.d.case5.m2", "pbcase", "(s' d(1,2)') * d(-1,2)", "d(1,2)");
    b.eq("pb.d.case5.m3", "pbcase", "(s' d(1,3)') * d(-1,3)", "d(1,3)");

    // r and the constants k_i
    b.comm("r.b1.a1sq_s", "rcomm", "b1", "a1^2 s");
    b.comm("r.b1.t1st1", "rcomm", "b1", "t1 s t1");
    b.eq("r.lantern", "rcomm", "d(-1,1) d(-1,2) d(1,2) a1^-2 a2'", "a1^2 s d(1,2) s d(1,2) a2'");
    for (int i = 1; i <= 4; ++i) {
        std::string k = "k" + num(i);
        b.eq("kb1." + k, "kb1", k + " * b1", "b1' * " + k);
        b.eq("kcube." + k, "kb1", "(" + k + " r)^3", k + " a1 s " + k + " s a1");
    }
    b.eq("k3.form", "k3", "k3", "(b1 d(1,2) a1 b1) * d(-2,-1)");
    b.eq("k3.chain", "k3", "k3", "a1' t1' (d(1,2) b1 a1)^4 t1");
    std::string uk = "t1 b1 d(1,2) a1 b1";
    b.eq("k3.u.a1", "k3", "(" + uk + ") * a1", "d(1,2)");
    b.eq("k3.u.e1", "k3", "(" + uk + ") * e1", "b1");
    b.eq("k3.u.a2", "k3", "(" + uk + ") * a2", "a1");
    b.eq("k3.u.d12", "k3", "(" + uk + ") * d(1,2)", "a2");
    b.eq("k3.u.chain", "k3", "(d(1,2) b1 a1)^4", "a2 ((" + uk + ") * d(-2,-1))");
    b.eq("k4.form", "k4", "k4", "(b2 a2 e1 b1') * d(1,3)");
    b.eq("k4.d3", "k4", "k4", "d3");
    b.eq("k5.form", "k5", "k5 r k5'", "a2^2 d(1,2)' b1' a1' e1 a1 b1 d(1,2)");
    b.comm("k5.comm", "k5", "r", "k5 r k5'");
    b.eq("k5.rel", "k5", "(r k5 r k5')^2", "s a1^2 k5 s a1^2 k5'");
    b.eq("k6.sa", "k6", "s a1^2", "(b1 a1)^3");
    b.eq("k6.ra", "k6", "r a1", "(b1 a1)^2");
    b.eq("k6.left", "k6", "t1 (b1 a1)^2 t1", "(b1 a1) t1 (b1 a1)^2 e1 a2");
    b.eq("k6.right", "k6", "e1 a2 (b1 a1)^2 t1", "(b1 a1)^2 t1 (b1 a1)");
    b.eq("k6.rel", "k6", "(r a1 t1)^5", "(s a1^2 t1)^4");
    b.eq("k6.k", "k6", "(r k6)^5", "(s a1^2 t1)^4");

    // extra generators written through r and d(1,2)
    b.eq("gen.b1", "gens", "b1", "a1' r a1'");
    b.eq("gen.b2", "gens", "b2", "(t1 a1 b1) * d(1,2)");
    b.eq("gen.e1", "gens", "e1", "(r d(1,2) a2') * b2");
    for (int i = 1; i + 1 < g; ++i)
        b.eq("gen." + E(i + 1), "gens", E(i + 1), "(" + T(i) + " " + T(i + 1) + ") * " + E(i));

    // jumping examples
    b.eq("jump.e2", "jump", "a1 e1 a1 a2 e1 e2 a2", "e1 a1 a2 e1 e2 a2 e2");
    b.eq("jump.reorder", "jump", "e1 a1 a2 e1 e2 a2", "e1 a2 e2 a1 e1 a2");
    b.eq("jump.b2b1", "jump", "(b1 a1 e1 a2) * b2", "(b2' a2' e1' a1') * b1");
    b.eq("jump.ab", "jump", "a1 * b1", "b1' * a1");
    b.eq("jump.ab2", "jump", "a1 * b1^2", "b1' * a1^2");
    b.eq("jump.aba", "jump", "(a1 b1) * a1", "b1");
}

void fixtures_closed(Builder& b) {
    const int g = b.g;
    if (g < 2) return;
    const std::string dg = "d" + num(g);
    std::string w = chain_word(g);
    {
        std::vector<std::string> p;
        for (int i = g - 1; i >= 1; --i) {
            p.push_back(E(i));
            p.push_back(A(i));
        }
        p.push_back("b1");
        w = chain_word(g) + " " + A(g) + " " + join(p);
    }
    std::string down = chain_down(g, false);  // a_g ... a1
    std::string chain_a = "(" + down + ")^" + num(2 * g);
    // a1 ... a_g a_g ... a1 style words
    auto palin = [&](int from_chain, bool with_b1) {
        // from chain position: 1 -> b1, 2 -> a1, 3 -> e1 ... up to a_g and back
        std::vector<std::string> up, back;
        int top = 2 * g;
        for (int m = from_chain; m <= top; ++m) up.push_back(chain_letter(m));
        for (int m = top; m >= from_chain; --m) back.push_back(chain_letter(m));
        (void)with_b1;
        return join(up) + " " + join(back);
    };
    std::string x_b1 = palin(1, true);   // b1 a1 ... a_g a_g ... a1 b1
    std::string x_e1 = palin(3, false);  // e1 a2 ... a_g a_g ... a2 e1
    std::string x_a1 = palin(2, false);  // a1 e1 ... a_g a_g ... e1 a1
    std::string tail;
    {
        std::vector<std::string> p;
        for (int i = g; i >= 2; --i) {
            p.push_back(A(i));
            if (i > 2) p.push_back(E(i - 1));
        }
        tail = "(" + join(p) + ")^" + num(2 * g - 2);
    }
    b.eq("closed.chain", "closed", dg + " ((" + w + ") * " + dg + ")", chain_a);
    b.boundary("closed.delta", "closed", "(" + chain_down(g, true) + " " + dg + ")^" + num(2 * g + 2));
    b.eq("closed.delta.chain", "closed", "(" + chain_down(g, true) + " " + dg + ")^" + num(2 * g + 2), "Delta");
    b.eq("closed.delta.split", "closed", "Delta", chain_a + " (" + x_b1 + ") (" + dg + " " + x_b1 + " " + dg + ")");
    b.eq("closed.chain.split", "closed", chain_a, tail + " (" + x_e1 + ") (" + x_a1 + ")");
    b.eq("closed.dg.b1", "closed", dg + " * b1", "b1' * " + dg);
    for (int i = 1; i <= g; ++i) b.comm("closed.dg." + A(i), "closed", dg, A(i));
    for (int i = 1; i < g; ++i) b.comm("closed.dg." + E(i), "closed", dg, E(i));
    b.comm("closed.x.b1", "closed", dg + " " + x_b1 + " " + dg, "b1");
    b.comm("closed.x.a1", "closed", dg + " " + x_b1 + " " + dg, "a1");
    b.sp_only_comm("closed.x.dg", "closed", dg + " " + x_b1 + " " + dg, dg);
    b.sp_only("closed.spin", "closed", tail, "(" + dg + " b1 a1)^4");
    b.sp_only("closed.dg2", "closed", dg + "^2", tail + " (" + x_e1 + ") (" + x_a1 + ")");
    b.sp_only("closed.delta.final", "closed", "Delta",
              dg + "^2 b1 (" + x_e1 + ")' (" + dg + " b1 a1)^-4 " + dg + "^2 b1 (" + dg + " " + x_b1 + " " + dg + ")");
    b.eq("closed.final.jump", "closed",
         dg + "^2 b1 (" + x_e1 + ")' (" + dg + " b1 a1)' (" + dg + " " + x_b1 + " " + dg + ") (" + dg +
             " b1 a1)^-3 " + dg + "^2 b1",
         dg + "^2 b1 a1 b1 " + dg + " (a1' b1' " + dg + "')^3 " + dg + "^2 b1");
    b.sp_only("closed.final", "closed", dg + "^2 b1 a1 b1 " + dg + " (a1' b1' " + dg + "')^3 " + dg + "^2 b1", "1");
    b.sp_only("closed.M4", "closed", m4_word(g) + " " + dg, dg + " " + m4_word(g));
}

void fixtures_equiv(Builder& b) {
    b.eq("equiv.B", "equiv", "(b2 a2 e1 a1 b1^2 a1 e1 a2 b2) w1'", "(b1 a1 e1)^4");
    b.eq("equiv.B.chain", "equiv", "(b1 a1 e1)^4 w1", "(b1 a1 e1 a2)^5");
    b.comm("equiv.B.comm", "equiv", "b2", "(b1 a1 e1)^4");
    b.eq("equiv.M3.rhs", "equiv", "d(1,2) d(1,3) d(2,3)", "t1' t2' d(1,2) t2 t1 t2' d(1,2) t2 d(1,2)");
    b.comm("equiv.d3.a", "equiv", "d3", "a1 a2 a3");
    b.comm("equiv.d12.a", "equiv", "d(1,2)", "a1 a2 a3");
    b.comm("equiv.d13.a", "equiv", "d(1,3)", "a1 a2 a3");
    b.comm("equiv.d23.a", "equiv", "d(2,3)", "a1 a2 a3");
    const std::string w = "a3 e2 a2 e1 a1 b1";
    b.eq("equiv.w.a1", "equiv", "(" + w + ") * a1", "b1");
    b.eq("equiv.w.e1", "equiv", "(" + w + ") * e1", "a1");
    b.eq("equiv.w.a2", "equiv", "(" + w + ") * a2", "e1");
    b.eq("equiv.w.e2", "equiv", "(" + w + ") * e2", "a2");
    b.eq("equiv.w.a3", "equiv", "(" + w + ") * a3", "e2");
    b.eq("equiv.w.t1", "equiv", "(" + w + ") * t1", "tt1");
    b.eq("equiv.w.t2", "equiv", "(" + w + ") * t2", "tt2");
    b.eq("equiv.w.d12", "equiv", "(" + w + ") * d(1,2)", "b2");
    b.eq("equiv.w.d3", "equiv", "(" + w + ") * d3", "dt3");
    b.eq("equiv.tt1", "equiv", "tt1", "a1 b1 e1 a1");
    b.eq("equiv.C", "equiv", "e2 e1 b1 dt3", "tt1' tt2' b2 tt2 tt1 tt2' b2 tt2 b2");
    b.sp_only("equiv.D", "equiv", d_word(b.g) + " db" + num(b.g), "db" + num(b.g) + " " + d_word(b.g));
}

void fixtures_lemma4(Builder& b) {
    const int g = b.g;
    std::vector<std::vector<std::string>> chains;
    {
        std::vector<std::string> c;
        for (int m = 1; m <= 2 * g; ++m) c.push_back(chain_letter(m));
        chains.push_back(c);
    }
    if (g >= 2) chains.push_back({"b2", "a2", "e1", "a1", "b1"});
    if (g >= 3) {
        std::vector<std::string> c{"b2", "a2"};
        for (int i = 2; i < g; ++i) {
            c.push_back(E(i));
            c.push_back(A(i + 1));
        }
        chains.push_back(c);
    }
    int cn = 0;
    for (const auto& ch : chains) {
        ++cn;
        const std::string pre = "chain" + num(cn) + ".";
        const int n = static_cast<int>(ch.size());
        for (int i = 0; i + 1 < n; ++i) {
            b.eq(pre + "cc." + ch[i] + "." + ch[i + 1], "chain", "(" + ch[i] + " " + ch[i + 1] + ") * " + ch[i], ch[i + 1]);
            b.eq(pre + "cc." + ch[i + 1] + "." + ch[i], "chain", "(" + ch[i + 1] + " " + ch[i] + ") * " + ch[i + 1], ch[i]);
        }
        for (int s = 0; s + 5 <= n; ++s) {
            auto c = [&](int m) { return ch[static_cast<std::size_t>(s + m - 1)]; };
            std::string p1 = join({c(2), c(1), c(3), c(2)});
            std::string p2 = join({c(4), c(3), c(5), c(4)});
            std::string p3 = join({c(4), c(5), c(3), c(4)});
            b.eq(pre + "five." + num(s + 1), "chain", "(" + p1 + ") (" + p2 + ") (" + p1 + ")",
                 "(" + p3 + ") (" + p1 + ") (" + p2 + ")");
        }
        for (int k = 2; k <= n; ++k) {
            std::vector<std::string> head(ch.begin(), ch.begin() + k), shorter(ch.begin(), ch.begin() + k - 1);
            std::vector<std::string> pal;
            for (int m = k - 1; m >= 1; --m) pal.push_back(ch[m]);
            pal.push_back(ch[0] + "^2");
            for (int m = 1; m < k; ++m) pal.push_back(ch[m]);
            std::string lhs = "(" + join(head) + ")^" + num(k + 1);
            std::string first = "(" + join(shorter) + ")^" + num(k);
            b.eq(pre + "power." + num(k) + ".a", "chain", lhs, first + " (" + join(pal) + ")");
            b.eq(pre + "power." + num(k) + ".b", "chain", lhs, "(" + join(pal) + ") " + first);
            for (int i = 2; i <= k; ++i)
                b.eq(pre + "shift." + num(k) + "." + num(i), "chain", ch[i - 1] + " (" + join(head) + ")",
                     "(" + join(head) + ") " + ch[i - 2]);
            if (k % 2 == 0) {
                std::string central = "(" + join(head) + ")^" + num(2 * k + 2);
                for (int i = 0; i < k; ++i) b.comm(pre + "center." + num(k) + "." + ch[i], "chain", central, ch[i]);
            }
        }
    }
    b.boundary("boundary.chain", "chain", "Delta");
}

void fixtures_lantern(Builder& b) {
    b.eq("lantern.M3", "lantern", "d3 a1 a2 a3", "d(1,2) d(1,3) d(2,3)");
    b.eq("lantern.d3", "lantern", "d3", "(b2 a2 e1 b1') * d(1,3)");
    b.eq("lantern.d3.literal", "lantern", "d3",
         "b2 a2 e1 b1' d(1,3) b1 e1' a2' b2'");
    b.eq("lantern.k4", "lantern", "k4", "d3");
    b.eq("lantern.shift", "lantern", "(t2 t3) * (d3 a1 a2 a3)",
         "((t2 t3) * d(1,2)) ((t2 t3) * d(1,3)) ((t2 t3) * d(2,3))");
    b.eq("lantern.shift.d", "lantern", "(t2 t3) * (d(1,2) d(1,3) d(2,3))", "d(1,3) d(1,4) d(3,4)");
    b.eq("lantern.shift.a", "lantern", "(t2 t3) * (a1 a2 a3)", "a1 a3 a4");
}

}  // namespace

std::vector<Relator> fixture_relations(const std::string& section, int g) {
    Builder b{g, {}};
    if (section == "sec4")
        fixtures_aux(b);
    else if (section == "sec5")
        fixtures_closed(b);
    else if (section == "sec6")
        fixtures_equiv(b);
    else if (section == "lemma4")
        fixtures_lemma4(b);
    else if (section == "lantern")
        fixtures_lantern(b);
    else
        throw std::invalid_argument("unknown fixture section " + section);
    return b.out;
}

}  // namespace mcg
