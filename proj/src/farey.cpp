#include "mcgkit/farey.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcg::farey {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("farey: coefficient overflow");
    return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("farey: coefficient overflow");
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::string Vertex::str() const { return std::to_string(p) + "/" + std::to_string(q); }

Vertex normalize(std::int64_t p, std::int64_t q) {
    if (std::gcd(p, q) != 1) throw std::invalid_argument("farey: (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

Vertex parse_vertex(const std::string& token) {
    auto slash = token.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("farey: expected p/q, got '" + token + "'");
    try {
        std::size_t a = 0, b = 0;
        std::string ps = token.substr(0, slash), qs = token.substr(slash + 1);
        std::int64_t p = std::stoll(ps, &a), q = std::stoll(qs, &b);
        if (a != ps.size() || b != qs.size()) throw std::invalid_argument("trailing characters");
        return normalize(p, q);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("farey: bad vertex '" + token + "': " + e.what());
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("farey: vertex out of range '" + token + "'");
    }
}

std::int64_t det(const Vertex& v, const Vertex& w) { return add(mul(v.p, w.q), -mul(v.q, w.p)); }

std::int64_t inter(const Vertex& v, const Vertex& w) {
    std::int64_t d = det(v, w);
    return d < 0 ? -d : d;
}

Vertex transvect(const Vertex& v, const Vertex& w, int sign) {
    std::int64_t k = mul(sign, det(v, w));
    return normalize(add(w.p, mul(k, v.p)), add(w.q, mul(k, v.q)));
}

Path parse_path(const std::string& text) {
    std::istringstream is(text);
    Path p;
    std::string tok;
    while (is >> tok) p.push_back(parse_vertex(tok));
    if (p.empty()) throw std::invalid_argument("farey: empty path");
    return p;
}

std::string format_path(const Path& p) {
    std::string s;
    for (const auto& v : p) {
        if (!s.empty()) s += ' ';
        s += v.str();
    }
    return s;
}

bool is_valid_path(const Path& p) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (inter(p[i], p[i + 1]) != 1) return false;
    return true;
}

bool is_closed_path(const Path& p) { return is_valid_path(p) && p.front() == p.back(); }

Path connect(const Vertex& v, const Vertex& w) {
    if (v == w) return {v};
    // N maps (1,0) to v and (0,1) to (x,y) with det N = 1.
    std::int64_t a = v.p, b = v.q, x = 0, y = 0;
    {
        // extended gcd for a*y - b*x = 1
        std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            std::int64_t qt = floor_div(r0, r1);
            std::int64_t r2 = r0 - qt * r1, s2 = s0 - qt * s1, t2 = t0 - qt * t1;
            r0 = r1, r1 = r2, s0 = s1, s1 = s2, t0 = t1, t1 = t2;
        }
        // s0*a + t0*b = r0 = +-1
        y = s0 * r0;
        x = -t0 * r0;
    }
    // Coordinates of w in the basis (v, (x,y)): inverse of [[a,x],[b,y]] is [[y,-x],[-b,a]].
    std::int64_t wp = add(mul(y, w.p), -mul(x, w.q));
    std::int64_t wq = add(mul(-b, w.p), mul(a, w.q));
    if (wq < 0) {
        wp = -wp;
        wq = -wq;
    }
    // Convergents of wp/wq, starting from 1/0.
    std::vector<std::pair<std::int64_t, std::int64_t>> conv{{1, 0}};
    std::int64_t h1 = 1, k1 = 0, h2 = 0, k2 = 1;
    std::int64_t num = wp, den = wq;
    while (den != 0) {
        std::int64_t t = floor_div(num, den);
        std::int64_t h = add(mul(t, h1), h2), k = add(mul(t, k1), k2);
        conv.emplace_back(h, k);
        h2 = h1, k2 = k1, h1 = h, k1 = k;
        std::int64_t r = num - t * den;
        num = den;
        den = r;
    }
    Path out;
    for (auto [h, k] : conv) {
        Vertex u = normalize(add(mul(a, h), mul(x, k)), add(mul(b, h), mul(y, k)));
        if (out.empty() || out.back() != u) out.push_back(u);
    }
    return out;
}

Path apply_move(const Path& p, const Move& m) {
    const std::size_t i = m.index;
    if (i + 2 >= p.size()) throw std::invalid_argument("farey: move index out of range");
    if (p[i] != m.a || p[i + 1] != m.b || p[i + 2] != m.c) throw std::invalid_argument("farey: move vertices do not match the path");
    Path out(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    if (m.kind == Move::Kind::Backtrack) {
        if (m.a != m.c || inter(m.a, m.b) != 1) throw std::invalid_argument("farey: not a backtrack");
        out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(i) + 3, p.end());
    } else {
        if (inter(m.a, m.b) != 1 || inter(m.b, m.c) != 1 || inter(m.a, m.c) != 1)
            throw std::invalid_argument("farey: not a triangle");
        out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(i) + 2, p.end());
    }
    return out;
}

bool validate_certificate(const Path& p, const Certificate& cert) {
    if (!is_closed_path(p)) return false;
    Path cur = p;
    try {
        for (const auto& m : cert) {
            cur = apply_move(cur, m);
            if (!is_valid_path(cur)) return false;
        }
    } catch (const std::exception&) {
        return false;
    }
    return cur.size() == 1;
}

Measure measure(const Path& p) {
    std::int64_t m = 0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        std::int64_t d = inter(p.front(), p[j]);
        if (d > m) {
            m = d;
            count = 0;
        }
        if (d == m) ++count;
    }
    return {m, count};
}

namespace {

Move make_move(const Path& p, std::size_t i) {
    Move m{p[i] == p[i + 2] ? Move::Kind::Backtrack : Move::Kind::Triangle, i, p[i], p[i + 1], p[i + 2]};
    return m;
}

}  // namespace

Reduction reduce_closed_path(const Path& input) {
    if (!is_closed_path(input)) throw std::invalid_argument("farey: not a closed path");
    Reduction red;
    Path p = input;
    while (p.size() > 1) {
        Measure before = measure(p);
        red.measures.push_back(before);
        Move mv;
        if (before.first <= 1) {
            // Every vertex is the base or a neighbour of it; the chord base-p[2] splits off p[1].
            if (p.size() < 3) throw std::logic_error("farey: closed path of length 2");
            if (p[2] != p[0] && inter(p[0], p[2]) != 1)
                throw std::logic_error("farey: no chord from the base vertex at radius 1");
            mv = make_move(p, 0);
        } else {
            std::size_t i = 1;
            while (inter(p[0], p[i]) != before.first) ++i;
            const Vertex &prev = p[i - 1], &next = p[i + 1];
            std::int64_t d = inter(prev, next);
            if (d > 1) throw std::logic_error("farey: neighbours of a farthest vertex intersect more than once");
            // d == 0 means the neighbours coincide: the twisted curve of the proof closes a backtrack.
            mv = make_move(p, i - 1);
        }
        red.certificate.push_back(mv);
        p = apply_move(p, mv);
        Measure after = measure(p);
        if (p.size() > 1 && !(after < before)) throw std::logic_error("farey: termination measure did not decrease");
    }
    red.measures.push_back(measure(p));
    return red;
}

Certificate split_square(const Path& p) {
    if (p.size() != 5 || !is_closed_path(p)) throw std::invalid_argument("farey: split_square needs a closed 4-path");
    if (inter(p[1], p[3]) > 1 && inter(p[0], p[2]) > 1)
        throw std::invalid_argument("farey: square has no chord");
    Certificate cert;
    Path cur = p;
    auto push = [&](std::size_t i) {
        Move m = make_move(cur, i);
        cert.push_back(m);
        cur = apply_move(cur, m);
    };
    if (inter(p[1], p[3]) <= 1) {
        // cut along the chord p1-p3
        push(1);
        push(0);
    } else {
        // cut along the chord p0-p2
        push(0);
        push(0);
    }
    while (cur.size() > 1) push(0);
    return cert;
}

Path random_closed_path(std::mt19937_64& rng, std::size_t max_len, std::int64_t bound) {
    if (max_len < 1 || bound < 1) throw std::invalid_argument("farey: bad random path parameters");
    std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
    Vertex start;
    for (;;) {
        std::int64_t p = coord(rng), q = coord(rng);
        if (std::gcd(p, q) == 1) {
            start = normalize(p, q);
            break;
        }
    }
    Path path{start};
    std::uniform_int_distribution<std::size_t> walk_len(0, max_len / 2);
    std::size_t steps = walk_len(rng);
    for (std::size_t s = 0; s < steps; ++s) {
        const Vertex v = path.back();
        // neighbours of v: u0 + t v
        Path c = connect(v, normalize(1, 0) == v ? normalize(0, 1) : normalize(1, 0));
        Vertex u0 = c[1];
        std::vector<Vertex> options;
        for (std::int64_t t = -3; t <= 3; ++t) {
            std::int64_t p = u0.p + t * v.p, q = u0.q + t * v.q;
            if (std::max(std::abs(p), std::abs(q)) <= bound) options.push_back(normalize(p, q));
        }
        if (options.empty()) break;
        Path trial = path;
        trial.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
        Path back = connect(trial.back(), start);
        if (trial.size() + back.size() - 1 > max_len) break;
        path = std::move(trial);
    }
    Path back = connect(path.back(), start);
    path.insert(path.end(), back.begin() + 1, back.end());
    if (path.size() == 1) return path;
    if (path.size() > max_len) path = {start};
    return path;
}

std::vector<Reduction> reduce_batch_serial(const std::vector<Path>& paths) {
    std::vector<Reduction> out;
    out.reserve(paths.size());
    for (const auto& p : paths) out.push_back(reduce_closed_path(p));
    return out;
}

std::vector<Reduction> reduce_batch_parallel(const std::vector<Path>& paths, int jobs) {
#ifdef _OPENMP
    if (jobs < 1) jobs = omp_get_max_threads();
    std::vector<Reduction> out(paths.size());
    const long n = static_cast<long>(paths.size());
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = reduce_closed_path(paths[static_cast<std::size_t>(i)]);
    return out;
#else
    (void)jobs;
    return reduce_batch_serial(paths);
#endif
}

std::string certificate_json(const Path& p, const Certificate& cert) {
    nlohmann::ordered_json j;
    j["path"] = format_path(p);
    nlohmann::ordered_json moves = nlohmann::ordered_json::array();
    for (const auto& m : cert) {
        nlohmann::ordered_json mj;
        mj["kind"] = m.kind == Move::Kind::Backtrack ? "backtrack" : "triangle";
        mj["index"] = m.index;
        mj["vertices"] = {m.a.str(), m.b.str(), m.c.str()};
        moves.push_back(mj);
    }
    j["moves"] = moves;
    j["triangles"] = std::count_if(cert.begin(), cert.end(), [](const Move& m) { return m.kind == Move::Kind::Triangle; });
    j["valid"] = validate_certificate(p, cert);
    return j.dump();
}

}  // namespace mcg::farey
