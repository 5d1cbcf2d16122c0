#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "mcgkit/word.hpp"

namespace mcg {

// Recursive-descent parser for the word-expression grammar, generic over the value algebra.
//   conj := prod ('*' prod)*        left-associative, a*b = a b a^-1
//   prod := factor*                 juxtaposition
//   factor := atom ('^' int | '\'')*
//   atom := label | d(i,j) | '1' | '(' conj ')'
// Alg supplies: value_type, one(), mul(a,b), pow(a,n), inv(a), conj(a,b), symbol(label).
template <class Alg>
class ExprParser {
public:
    using V = typename Alg::value_type;

    ExprParser(std::string_view text, Alg& alg) : s_(text), alg_(alg) {}

    V run() {
        V v = conj();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return v;
    }

private:
    std::string_view s_;
    Alg& alg_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool at_atom_start() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '1';
    }

    V conj() {
        V v = prod();
        while (peek('*')) {
            ++pos_;
            V rhs = prod();
            v = alg_.conj(v, rhs);
        }
        return v;
    }

    V prod() {
        V v = alg_.one();
        bool first = true;
        while (at_atom_start()) {
            V f = factor();
            v = first ? std::move(f) : alg_.mul(v, f);
            first = false;
        }
        return v;
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        std::size_t digits = pos_;
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000'000LL) throw ParseError("integer too large", start);
            ++pos_;
        }
        if (pos_ == digits) throw ParseError("expected integer", start);
        return neg ? -v : v;
    }

    V factor() {
        V v = atom();
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                v = alg_.pow(v, integer());
            } else if (pos_ < s_.size() && s_[pos_] == '\'') {
                ++pos_;
                v = alg_.inv(v);
            } else {
                break;
            }
        }
        return v;
    }

    V atom() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            V v = conj();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (c == '1') {
            ++pos_;
            return alg_.one();
        }
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string label(s_.substr(start, pos_ - start));
        if (label == "d" && pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            long long i = integer();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != ',') throw ParseError("expected ','", pos_);
            ++pos_;
            long long j = integer();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            label = "d(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
        try {
            return alg_.symbol(label);
        } catch (const ParseError&) {
            throw;
        } catch (const WordLengthExceeded&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
    }
};

template <class Alg>
typename Alg::value_type parse_with(std::string_view text, Alg& alg) {
    return ExprParser<Alg>(text, alg).run();
}

}  // namespace mcg
