#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace mcg::farey {

// A primitive pair up to sign, normalized so that q > 0, or q == 0 and p == 1.
struct Vertex {
    std::int64_t p = 1, q = 0;
    auto operator<=>(const Vertex&) const = default;
    std::string str() const;  // "p/q"
};

// Throws std::invalid_argument unless gcd(|p|,|q|) == 1.
Vertex normalize(std::int64_t p, std::int64_t q);
Vertex parse_vertex(const std::string& token);

std::int64_t det(const Vertex& v, const Vertex& w);  // p_v q_w - q_v p_w
std::int64_t inter(const Vertex& v, const Vertex& w);
// Normalized w + sign * det(v, w) * v.
Vertex transvect(const Vertex& v, const Vertex& w, int sign);

using Path = std::vector<Vertex>;
Path parse_path(const std::string& text);
std::string format_path(const Path& p);
bool is_valid_path(const Path& p);   // consecutive inter == 1
bool is_closed_path(const Path& p);  // valid, first == last

// A path from v to w built from continued-fraction convergents.
Path connect(const Vertex& v, const Vertex& w);

struct Move {
    enum class Kind { Backtrack, Triangle };
    Kind kind;
    std::size_t index = 0;  // position of the first of the three vertices
    Vertex a, b, c;         // the three vertices (a, b, a for a backtrack)
    bool operator==(const Move&) const = default;
};
using Certificate = std::vector<Move>;

// Applies one move; throws std::invalid_argument when it is not legal on the path.
Path apply_move(const Path& p, const Move& m);
bool validate_certificate(const Path& p, const Certificate& cert);

// (radius around the base vertex, number of vertices at that radius)
using Measure = std::pair<std::int64_t, std::size_t>;
Measure measure(const Path& p);

struct Reduction {
    Certificate certificate;
    std::vector<Measure> measures;  // before each move, then the final measure
};

// Reduces a closed path to its base vertex, asserting that the measure decreases at every move.
Reduction reduce_closed_path(const Path& p);
Certificate split_square(const Path& p);

// Random closed path: a walk on Farey neighbours closed by connect().
Path random_closed_path(std::mt19937_64& rng, std::size_t max_len, std::int64_t bound);

// Batch reduction: serial reference and parallel kernel; both return certificates in input order.
std::vector<Reduction> reduce_batch_serial(const std::vector<Path>& paths);
std::vector<Reduction> reduce_batch_parallel(const std::vector<Path>& paths, int jobs);

std::string certificate_json(const Path& p, const Certificate& cert);

}  // namespace mcg::farey
