#include <cmath>
#include <numeric>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mcgkit/farey.hpp"

using namespace mcg::farey;

namespace {

Path P(const char* text) { return parse_path(text); }

std::size_t triangles(const Certificate& c) {
    std::size_t n = 0;
    for (const auto& m : c) n += m.kind == Move::Kind::Triangle;
    return n;
}

long long test_inter(std::pair<long long, long long> a, std::pair<long long, long long> b) {
    return std::llabs(a.first * b.second - a.second * b.first);
}

// Fewest triangle cuts over all legal move sequences of length <= depth that reach a single vertex.
int brute_force_triangles(const Path& p, int depth) {
    if (p.size() == 1) return 0;
    if (depth == 0) return 1000;
    int best = 1000;
    for (std::size_t i = 0; i + 2 < p.size(); ++i) {
        Path q = p;
        bool back = p[i] == p[i + 2];
        auto pi = std::make_pair(p[i].p, p[i].q), pk = std::make_pair(p[i + 2].p, p[i + 2].q);
        if (back) {
            q.erase(q.begin() + static_cast<long>(i) + 1, q.begin() + static_cast<long>(i) + 3);
            best = std::min(best, brute_force_triangles(q, depth - 1));
        } else if (test_inter(pi, pk) == 1) {
            q.erase(q.begin() + static_cast<long>(i) + 1);
            best = std::min(best, 1 + brute_force_triangles(q, depth - 1));
        }
    }
    return best;
}

// Breadth-first distance between two vertices among fractions with |p|, q <= bound.
int bfs_distance(const Vertex& from, const Vertex& to, long long bound) {
    std::vector<Vertex> all;
    for (long long q = 0; q <= bound; ++q)
        for (long long p = -bound; p <= bound; ++p)
            if (std::gcd(p, q) == 1 && (q > 0 || p == 1)) all.push_back({p, q});
    std::map<Vertex, int> dist{{from, 0}};
    std::queue<Vertex> todo;
    todo.push(from);
    while (!todo.empty()) {
        Vertex v = todo.front();
        todo.pop();
        if (v == to) return dist[v];
        for (const auto& w : all)
            if (!dist.count(w) && test_inter({v.p, v.q}, {w.p, w.q}) == 1) {
                dist[w] = dist[v] + 1;
                todo.push(w);
            }
    }
    return -1;
}

bool strictly_decreasing(const std::vector<Measure>& ms) {
    for (std::size_t i = 1; i < ms.size(); ++i)
        if (!(ms[i] < ms[i - 1])) return false;
    return true;
}

}  // namespace

TEST_SUITE("farey") {

TEST_CASE("vertices") {
    CHECK(normalize(-2, -3) == Vertex{2, 3});
    CHECK(normalize(-1, 0) == Vertex{1, 0});
    CHECK(normalize(3, -1) == Vertex{-3, 1});
    CHECK_THROWS_AS(normalize(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(normalize(0, 0), std::invalid_argument);
    CHECK(parse_vertex("-5/3").str() == "-5/3");
    CHECK(inter({1, 0}, {0, 1}) == 1);
    CHECK(inter({1, 0}, {1, 0}) == 0);
    CHECK(inter({1, 0}, {2, 1}) == 1);
}

TEST_CASE("transvect") {
    CHECK(transvect({1, 0}, {0, 1}, 1) == Vertex{1, 1});
    CHECK(transvect({1, 0}, {0, 1}, -1) == Vertex{-1, 1});
    CHECK(transvect({2, 3}, {2, 3}, 1) == Vertex{2, 3});
}

TEST_CASE("normalization and intersection properties") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> d(-500, 500);
    for (int n = 0; n < 20000; ++n) {
        long long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (std::gcd(a, b) != 1 || std::gcd(c, e) != 1) continue;
        Vertex v = normalize(a, b), w = normalize(c, e);
        REQUIRE(normalize(v.p, v.q) == v);
        REQUIRE(normalize(-a, -b) == v);
        REQUIRE(inter(v, w) == inter(w, v));
        REQUIRE(inter(v, w) == test_inter({a, b}, {c, e}));
        for (int s : {1, -1}) REQUIRE(inter(transvect(v, w, s), v) == inter(w, v));
    }
}

TEST_CASE("connect") {
    CHECK(connect({2, 5}, {2, 5}) == Path{{2, 5}});
    CHECK(connect({1, 0}, {0, 1}).size() == 2);
    Path p = connect({1, 0}, {3, 2});
    CHECK(is_valid_path(p));
    CHECK(p.front() == Vertex{1, 0});
    CHECK(p.back() == Vertex{3, 2});
    CHECK(static_cast<int>(p.size()) - 1 == bfs_distance({1, 0}, {3, 2}, 3));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> d(-100000, 100000);
    for (int n = 0; n < 2000; ++n) {
        long long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (std::gcd(a, b) != 1 || std::gcd(c, e) != 1) continue;
        Vertex v = normalize(a, b), w = normalize(c, e);
        Path q = connect(v, w);
        REQUIRE(is_valid_path(q));
        REQUIRE(q.front() == v);
        REQUIRE(q.back() == w);
        double big = static_cast<double>(std::max({std::llabs(a), std::llabs(b), std::llabs(c), std::llabs(e)}));
        REQUIRE(static_cast<double>(q.size()) <= 4 * std::log2(big + 2) + 4);
    }
}

TEST_CASE("reduction examples") {
    Path tri = P("1/0 0/1 1/1 1/0");
    Reduction r = reduce_closed_path(tri);
    CHECK(triangles(r.certificate) == 1);
    CHECK(r.certificate.size() == 2);
    CHECK(r.certificate.back().kind == Move::Kind::Backtrack);
    CHECK(validate_certificate(tri, r.certificate));

    Path back = P("2/3 1/1 2/3");
    Reduction rb = reduce_closed_path(back);
    CHECK(rb.certificate == Certificate{{Move::Kind::Backtrack, 0, {2, 3}, {1, 1}, {2, 3}}});

    Path quad = P("1/0 0/1 1/1 2/1 1/0");
    Reduction rq = reduce_closed_path(quad);
    CHECK(triangles(rq.certificate) == 2);
    CHECK(brute_force_triangles(quad, 4) == 2);
    CHECK(rq.certificate[0] == Move{Move::Kind::Triangle, 0, {1, 0}, {0, 1}, {1, 1}});
    CHECK(rq.certificate[1] == Move{Move::Kind::Triangle, 0, {1, 0}, {1, 1}, {2, 1}});
    CHECK(validate_certificate(quad, rq.certificate));

    CHECK(reduce_closed_path(P("3/4")).certificate.empty());
    CHECK_THROWS(reduce_closed_path(P("1/0 1/1 0/1")));
    CHECK_THROWS(reduce_closed_path(P("1/0 1/2 1/0")));
}

TEST_CASE("squares") {
    Path degenerate = P("1/0 0/1 1/1 0/1 1/0");
    Certificate c = split_square(degenerate);
    CHECK(triangles(c) == 0);
    CHECK(c.size() == 2);
    CHECK(validate_certificate(degenerate, c));

    Path two = P("1/0 0/1 1/1 2/1 1/0");
    Certificate c2 = split_square(two);
    CHECK(triangles(c2) == 2);
    CHECK(validate_certificate(two, c2));
    CHECK_THROWS(split_square(P("1/0 0/1 1/0")));
}

TEST_CASE("validation rejects bad certificates") {
    Path tri = P("1/0 0/1 1/1 1/0");
    CHECK_FALSE(validate_certificate(tri, {}));
    CHECK_FALSE(validate_certificate(P("1/0 0/1 1/1 2/1 1/0"), {{Move::Kind::Triangle, 0, {1, 0}, {0, 1}, {1, 1}},
                                                                {Move::Kind::Triangle, 1, {0, 1}, {1, 1}, {2, 1}}}));
    CHECK_FALSE(validate_certificate(tri, {{Move::Kind::Backtrack, 0, {1, 0}, {0, 1}, {1, 0}}}));
    CHECK(validate_certificate(P("5/7"), {}));
}

TEST_CASE("random closed paths reduce with decreasing measure") {
    std::mt19937_64 rng(42);
    std::vector<Path> paths;
    for (int n = 0; n < 1000; ++n) {
        Path p = random_closed_path(rng, 40, 60);
        REQUIRE(p.size() <= 41);
        REQUIRE(is_closed_path(p));
        paths.push_back(p);
    }
    auto reds = reduce_batch_serial(paths);
    auto par = reduce_batch_parallel(paths, 3);
    for (std::size_t i = 0; i < paths.size(); ++i) {
        CAPTURE(format_path(paths[i]));
        REQUIRE(validate_certificate(paths[i], reds[i].certificate));
        REQUIRE(strictly_decreasing(reds[i].measures));
        REQUIRE(par[i].certificate == reds[i].certificate);
        // every intermediate path stays a Farey path
        Path cur = paths[i];
        for (const auto& m : reds[i].certificate) {
            cur = apply_move(cur, m);
            REQUIRE(is_valid_path(cur));
        }
    }
}

TEST_CASE("certificate json") {
    Path tri = P("1/0 0/1 1/1 1/0");
    std::string j = certificate_json(tri, reduce_closed_path(tri).certificate);
    CHECK(j.find("\"triangles\":1") != std::string::npos);
    CHECK(j.find("\"valid\":true") != std::string::npos);
}

}  // TEST_SUITE
