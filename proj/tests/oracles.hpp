#pragma once

// Reference implementations used only by tests.

#include <cstdint>
#include <random>
#include <vector>

#include "mcgkit/word.hpp"

namespace oracle {

// Deletes the leftmost cancelling pair until none is left.
inline std::vector<mcg::Letter> naive_reduce(std::vector<mcg::Letter> w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] == -w[i + 1]) {
                w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
    }
    return w;
}

inline std::vector<mcg::Letter> random_letters(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len), idx(0, rank - 1);
    std::bernoulli_distribution sign;
    std::vector<mcg::Letter> out(len(rng));
    for (auto& l : out) l = mcg::make_letter(idx(rng), sign(rng) ? 1 : -1);
    return out;
}

// Signed pairing on coefficient vectors (A_1, B_1, ..., A_g, B_g) with <A_i, B_i> = +1.
inline long long pairing(const std::vector<long long>& x, const std::vector<long long>& y) {
    long long s = 0;
    for (std::size_t i = 0; i + 1 < x.size(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
    return s;
}

}  // namespace oracle
