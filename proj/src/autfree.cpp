#include "mcgkit/autfree.hpp"

#include <fstream>
#include <sstream>

namespace mcg {

Alphabet pi1_alphabet(int g) {
    std::vector<std::string> n;
    for (int i = 1; i <= g; ++i) {
        n.push_back("x" + std::to_string(i));
        n.push_back("y" + std::to_string(i));
    }
    return Alphabet(std::move(n));
}

Alphabet mc_alphabet(int g) {
    std::vector<std::string> n;
    if (g >= 2) n.push_back("b2");
    n.push_back("b1");
    n.push_back("a1");
    for (int i = 1; i < g; ++i) {
        n.push_back("e" + std::to_string(i));
        n.push_back("a" + std::to_string(i + 1));
    }
    return Alphabet(std::move(n));
}

Endo::Endo(int genus, std::vector<Word> images) : genus_(genus), images_(std::move(images)) {
    if (images_.size() != 2 * static_cast<std::size_t>(genus)) throw std::invalid_argument("endo: wrong number of images");
}

Endo Endo::identity(int genus) {
    std::vector<Word> im;
    for (std::size_t i = 0; i < 2 * static_cast<std::size_t>(genus); ++i) im.push_back(Word{make_letter(i, 1)});
    return Endo(genus, std::move(im));
}

bool Endo::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i].size() != 1 || images_[i][0] != make_letter(i, 1)) return false;
    return true;
}

Word apply(const Endo& phi, const Word& w) {
    if (w.support_rank() > phi.rank()) throw std::invalid_argument("apply: word outside the endomorphism's alphabet");
    Word r;
    for (Letter l : w.letters()) {
        const Word& im = phi.image(letter_index(l));
        if (l > 0)
            r *= im;
        else
            r *= invert(im);
    }
    return r;
}

Endo compose(const Endo& phi, const Endo& psi) {
    if (phi.genus() != psi.genus()) throw std::invalid_argument("compose: genus mismatch");
    std::vector<Word> im;
    im.reserve(psi.rank());
    for (const Word& w : psi.images()) im.push_back(apply(phi, w));
    return Endo(phi.genus(), std::move(im));
}

bool equal(const Endo& phi, const Endo& psi) {
    if (phi.genus() != psi.genus()) throw std::invalid_argument("equal: genus mismatch");
    return phi.images() == psi.images();
}

SympMatrix abelianize(const Endo& phi) {
    SympMatrix m = SympMatrix::zero(phi.genus());
    for (std::size_t j = 0; j < phi.rank(); ++j)
        for (Letter l : phi.image(j).letters()) m.at(letter_index(l), j) += letter_sign(l);
    return m;
}

Endo inner(int genus, const Word& w) {
    std::vector<Word> im;
    for (std::size_t i = 0; i < 2 * static_cast<std::size_t>(genus); ++i)
        im.push_back(conjugate(w, Word{make_letter(i, 1)}));
    return Endo(genus, std::move(im));
}

Word boundary_word(int g) {
    Word w;
    for (int i = 0; i < g; ++i) {
        Word x{make_letter(2 * static_cast<std::size_t>(i), 1)};
        Word y{make_letter(2 * static_cast<std::size_t>(i) + 1, 1)};
        w *= commutator(x, y);
    }
    return w;
}

ValidationError::ValidationError(std::string entry, std::string check, const std::string& detail)
    : std::runtime_error(check + " failed for " + entry + (detail.empty() ? "" : ": " + detail)),
      entry_(std::move(entry)),
      check_(std::move(check)) {}

TwistTable::TwistTable(int genus, std::vector<TwistEntry> entries)
    : genus_(genus), boundary_(boundary_word(genus)), alphabet_(mc_alphabet(genus)) {
    entries_.resize(alphabet_.rank());
    std::vector<bool> seen(alphabet_.rank(), false);
    for (auto& e : entries) {
        std::size_t i = alphabet_.find(e.label);
        if (i >= alphabet_.rank()) throw std::invalid_argument("twist table: unexpected generator " + e.label);
        if (seen[i]) throw std::invalid_argument("twist table: duplicate generator " + e.label);
        if (e.forward.genus() != genus || e.cls.genus != genus)
            throw std::invalid_argument("twist table: genus mismatch in " + e.label);
        seen[i] = true;
        entries_[i] = std::move(e);
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw std::invalid_argument("twist table: missing generator " + alphabet_.name(i));
}

const TwistEntry& TwistTable::entry(const std::string& label) const {
    std::size_t i = alphabet_.find(label);
    if (i >= alphabet_.rank()) throw std::invalid_argument("unknown generator '" + label + "'");
    return entries_[i];
}

Endo invert_generator(const TwistEntry& e) {
    if (!e.inverse) throw std::runtime_error("no inverse recorded for " + e.label);
    return *e.inverse;
}

Word TwistTable::act(const Word& mc, const Word& x, const Deadline& dl) const {
    if (mc.support_rank() > alphabet_.rank()) throw std::invalid_argument("mapping-class word outside the generator alphabet");
    Word r = x;
    const auto& ls = mc.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        dl.check();
        const TwistEntry& e = entries_[letter_index(*it)];
        r = apply(*it > 0 ? e.forward : invert_generator(e), r);
    }
    return r;
}

Endo TwistTable::evaluate(const Word& w, const Deadline& dl) const {
    if (w.support_rank() > alphabet_.rank()) throw std::invalid_argument("mapping-class word outside the generator alphabet");
    std::vector<Word> im = Endo::identity(genus_).images();
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        dl.check();
        const TwistEntry& e = entries_[letter_index(*it)];
        const Endo& f = *it > 0 ? e.forward : invert_generator(e);
        for (auto& x : im) x = apply(f, x);
    }
    return Endo(genus_, std::move(im));
}

SympMatrix TwistTable::sp(const Word& w) const {
    if (w.support_rank() > alphabet_.rank()) throw std::invalid_argument("mapping-class word outside the generator alphabet");
    SympMatrix m(genus_);
    for (Letter l : w.letters()) m = m * transvection_power(entries_[letter_index(l)].cls, letter_sign(l));
    return m;
}

Endo evaluate_word(const TwistTable& t, const Word& w, const Deadline& dl) { return t.evaluate(w, dl); }
SympMatrix sp_of_word(const TwistTable& t, const Word& w) { return t.sp(w); }

namespace {

Word parse_mc_text(int g, const std::string& text) {
    Alphabet a = mc_alphabet(g);
    auto resolve = [&](const std::string& label) -> Word {
        auto lookup = [&](const std::string& s) { return parse_word(s, a); };
        if (label == "d12") return lookup("(b1' a1' e1' a2') * b2");
        if (label == "t1") return lookup("e1 a1 a2 e1");
        if (label == "t2") return lookup("e2 a2 a3 e2");
        std::size_t i = a.find(label);
        if (i >= a.rank()) throw std::invalid_argument("unknown generator '" + label + "'");
        return Word{make_letter(i, 1)};
    };
    // Composite helpers are expanded in two passes so that d13, d23, d3 can refer to d12, t_i.
    auto resolve2 = [&](const std::string& label) -> Word {
        if (label == "d13") return parse_expression("t2 * d12", resolve);
        if (label == "d23") return parse_expression("t1 * (t2 * d12)", resolve);
        if (label == "d3") return parse_expression("(b2 a2 e1 b1') * (t2 * d12)", resolve);
        return resolve(label);
    };
    return parse_expression(text, resolve2);
}

}  // namespace

std::vector<ValidationRelator> validation_relators(int g) {
    std::vector<ValidationRelator> out;
    Alphabet a = mc_alphabet(g);
    auto gen = [&](std::size_t i) { return Word{make_letter(i, 1)}; };
    auto braided = [&](const std::string& u, const std::string& v) {
        if (u == "b2") return v == "a2";
        if (v == "b2") return u == "a2";
        std::size_t i = a.find(u), j = a.find(v);
        return (i > j ? i - j : j - i) == 1;
    };
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = i + 1; j < a.rank(); ++j) {
            const std::string &u = a.name(i), &v = a.name(j);
            Word x = gen(i), y = gen(j);
            if (braided(u, v))
                out.push_back({"M1." + u + "." + v, "V3", concat(concat(x, y), x), concat(concat(y, x), y)});
            else
                out.push_back({"M1." + u + "." + v, "V3", concat(x, y), concat(y, x)});
        }
    if (g >= 2)
        out.push_back({"M2", "V4", parse_mc_text(g, "(b1 a1 e1 a2)^5"),
                       parse_mc_text(g, "b2 a2 e1 a1 b1^2 a1 e1 a2 b2")});
    if (g >= 3)
        out.push_back({"M3", "V5", parse_mc_text(g, "d3 a1 a2 a3"), parse_mc_text(g, "d12 d13 d23")});
    return out;
}

void TwistTable::validate() const {
    for (const auto& e : entries_) {
        if (apply(e.forward, boundary_) != boundary_)
            throw ValidationError(e.label, "V1", "boundary word not fixed");
        if (e.inverse) {
            if (!compose(e.forward, *e.inverse).is_identity() || !compose(*e.inverse, e.forward).is_identity())
                throw ValidationError(e.label, "V1", "recorded inverse is not a two-sided inverse");
        }
        if (e.cls.is_zero() || abelianize(e.forward) != transvection(e.cls))
            throw ValidationError(e.label, "V2", "abelianization differs from transvection of " + e.cls.str());
    }
    for (const auto& r : validation_relators(genus_)) {
        if (!equal(evaluate(r.lhs), evaluate(r.rhs))) throw ValidationError(r.id, r.check, "relator does not hold");
    }
}

// --- chain plumbing model -------------------------------------------------
//
// The surface is a disk with 2g bands attached along its boundary in the order
// 1 2 1 3 2 4 3 ... 2g 2g-1 2g, so consecutive bands interlace. The core curves
// c_1..c_2g of the bands form the chain b1, a1, e1, a2, ..., e_{g-1}, a_g, and the
// band loops z_1..z_2g form a free basis. b2 is the boundary component of a
// neighbourhood of c_1 u c_2 u c_3 that avoids the basepoint.

namespace {

Word zl(int k, int sign = 1) { return Word{make_letter(static_cast<std::size_t>(k - 1), sign)}; }

// Twist along the core of band k: z_{k+1} -> z_k^s z_{k+1}, z_{k-1} -> z_{k-1} z_k^-s.
Endo chain_twist(int g, int k, int s) {
    Endo id = Endo::identity(g);
    std::vector<Word> im = id.images();
    const int n = 2 * g;
    if (k + 1 <= n) im[static_cast<std::size_t>(k)] = concat(zl(k, s), zl(k + 1));
    if (k - 1 >= 1) im[static_cast<std::size_t>(k - 2)] = concat(zl(k - 1), zl(k, -s));
    return Endo(g, std::move(im));
}

// Loop of the b2 curve read from its crossing with band 4.
Word b2_loop() { return Word{make_letter(2, -1), make_letter(1, -1), make_letter(0, -1), make_letter(1, 1)}; }

Endo b2_twist(int g, int s) {
    std::vector<Word> im = Endo::identity(g).images();
    im[3] = concat(power(b2_loop(), -s), zl(4));
    return Endo(g, std::move(im));
}

// Change of basis: psi sends x_i, y_i to words in z with prod [psi x_i, psi y_i] equal to
// the chain model's boundary word; psi_inv sends z_k to words in x, y.
void basis_change(int g, std::vector<Word>& psi, std::vector<Word>& psi_inv) {
    if (g == 0) return;
    basis_change(g - 1, psi, psi_inv);
    const int n = 2 * g;
    Word u;
    for (int k = 1; k < n; k += 2) u *= zl(k);
    Word h = conjugate(u, zl(n, -1));
    for (auto& w : psi) w = conjugate(h, w);
    psi.push_back(h);
    psi.push_back(invert(u));

    Word xg = Word{make_letter(static_cast<std::size_t>(n - 2), 1)};
    Word yg = Word{make_letter(static_cast<std::size_t>(n - 1), 1)};
    for (auto& w : psi_inv) w = conjugate(invert(xg), w);
    Word odd;
    for (int k = 1; k < n - 2; k += 2) odd *= psi_inv[static_cast<std::size_t>(k - 1)];
    psi_inv.push_back(concat(invert(odd), invert(yg)));
    psi_inv.push_back(conjugate(yg, invert(xg)));
}

std::string chain_label(int k) {
    if (k == 1) return "b1";
    if (k % 2 == 0) return "a" + std::to_string(k / 2);
    return "e" + std::to_string(k / 2);
}

// Exponent-sum class, with the sign fixed so that the first nonzero coefficient is positive.
HomologyClass class_of(int g, const Word& w) {
    HomologyClass h(g);
    for (Letter l : w.letters()) h.coeffs[letter_index(l)] += letter_sign(l);
    for (const auto& c : h.coeffs)
        if (c != 0) return c < 0 ? -h : h;
    return h;
}

}  // namespace

std::vector<TwistEntry> derive_twists(int g) {
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    std::vector<Word> psi, psi_inv;
    basis_change(g, psi, psi_inv);
    Endo to_z(g, psi), to_xy(g, psi_inv);
    auto transport = [&](const Endo& f) { return compose(to_xy, compose(f, to_z)); };

    std::vector<TwistEntry> out;
    for (int k = 1; k <= 2 * g; ++k) {
        TwistEntry e;
        e.label = chain_label(k);
        e.forward = transport(chain_twist(g, k, 1));
        e.inverse = transport(chain_twist(g, k, -1));
        e.cls = class_of(g, psi_inv[static_cast<std::size_t>(k - 1)]);
        out.push_back(std::move(e));
    }
    if (g >= 2) {
        TwistEntry e;
        e.label = "b2";
        e.forward = transport(b2_twist(g, 1));
        e.inverse = transport(b2_twist(g, -1));
        e.cls = class_of(g, apply(to_xy, b2_loop()));
        out.push_back(std::move(e));
    }
    return out;
}

TwistTable load_twist_table(int g) {
    TwistTable t(g, derive_twists(g));
    t.validate();
    return t;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    return out;
}

}  // namespace

TwistTable parse_twist_table(int g, const std::string& text) {
    Alphabet pa = pi1_alphabet(g);
    std::map<std::string, TwistEntry> entries;
    std::vector<std::string> order;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("twist table line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto parts = split(line, ';');
        std::istringstream head(parts[0]);
        std::string kind, label;
        head >> kind >> label;
        if ((kind != "gen" && kind != "inv") || label.empty()) fail("expected 'gen <label>' or 'inv <label>'");
        std::vector<Word> im = Endo::identity(g).images();
        std::optional<HomologyClass> cls;
        for (std::size_t p = 1; p < parts.size(); ++p) {
            const std::string& f = parts[p];
            if (f.empty()) continue;
            if (f.rfind("h ", 0) == 0 || f == "h") {
                std::istringstream hs(f.substr(1));
                std::vector<BigInt> c;
                std::string tok;
                while (hs >> tok) c.emplace_back(tok);
                if (c.size() != 2 * static_cast<std::size_t>(g)) fail("homology class needs " + std::to_string(2 * g) + " entries");
                cls = HomologyClass(g, std::move(c));
                continue;
            }
            auto arrow = f.find("->");
            if (arrow == std::string::npos) fail("expected '<letter> -> <word>'");
            std::string lhs = trim(f.substr(0, arrow));
            std::size_t idx = pa.find(lhs);
            if (idx >= pa.rank()) fail("unknown basis letter '" + lhs + "'");
            try {
                im[idx] = parse_word(f.substr(arrow + 2), pa);
            } catch (const std::exception& e) {
                fail(e.what());
            }
        }
        if (kind == "gen") {
            if (!cls) fail("missing homology class for " + label);
            auto& e = entries[label];
            if (!e.label.empty()) fail("duplicate entry " + label);
            e.label = label;
            e.forward = Endo(g, std::move(im));
            e.cls = *cls;
            order.push_back(label);
        } else {
            auto it = entries.find(label);
            if (it == entries.end()) fail("inverse given before its generator " + label);
            it->second.inverse = Endo(g, std::move(im));
        }
    }
    std::vector<TwistEntry> list;
    for (const auto& l : order) list.push_back(entries[l]);
    return TwistTable(g, std::move(list));
}

TwistTable load_twist_table_file(int g, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    TwistTable t = parse_twist_table(g, ss.str());
    t.validate();
    return t;
}

std::string format_twist_table(const TwistTable& t) {
    Alphabet pa = pi1_alphabet(t.genus());
    std::ostringstream os;
    os << "# twist table, genus " << t.genus() << "\n";
    auto images = [&](const Endo& f) {
        for (std::size_t i = 0; i < f.rank(); ++i) {
            std::string w = render(f.image(i), pa);
            os << " ; " << pa.name(i) << " -> " << (w.empty() ? "1" : w);
        }
    };
    for (const auto& e : t.entries()) {
        os << "gen " << e.label << " ; h " << e.cls.str();
        images(e.forward);
        os << "\n";
        if (e.inverse) {
            os << "inv " << e.label;
            images(*e.inverse);
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace mcg
