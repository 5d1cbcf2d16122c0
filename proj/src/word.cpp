#include "mcgkit/word.hpp"

#include "mcgkit/expr.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <unordered_map>

namespace mcg {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw std::invalid_argument("alphabet: empty label");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == names_[i]) throw std::invalid_argument("alphabet: duplicate label " + names_[i]);
    }
}

std::size_t Alphabet::find(std::string_view label) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == label) return i;
    return names_.size();
}

WordLengthExceeded::WordLengthExceeded(std::size_t len)
    : std::runtime_error("word length guard exceeded (" + std::to_string(len) + " letters)") {}

namespace {

std::size_t initial_max_len() {
    if (const char* env = std::getenv("MCGKIT_MAX_WORD_LEN")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return 1'000'000;
}

std::atomic<std::size_t>& max_len_ref() {
    static std::atomic<std::size_t> v{initial_max_len()};
    return v;
}

}  // namespace

std::size_t max_word_length() { return max_len_ref().load(std::memory_order_relaxed); }
void set_max_word_length(std::size_t n) { max_len_ref().store(n, std::memory_order_relaxed); }

std::vector<Letter> free_reduce(std::vector<Letter> letters) {
    std::size_t top = 0;
    for (Letter l : letters) {
        if (top > 0 && letters[top - 1] == -l)
            --top;
        else
            letters[top++] = l;
    }
    letters.resize(top);
    return letters;
}

Word::Word(std::vector<Letter> letters) : letters_(free_reduce(std::move(letters))) {
    if (letters_.size() > max_word_length()) throw WordLengthExceeded(letters_.size());
}

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word& Word::push(Letter l) {
    if (!letters_.empty() && letters_.back() == -l) {
        letters_.pop_back();
    } else {
        letters_.push_back(l);
        if (letters_.size() > max_word_length()) throw WordLengthExceeded(letters_.size());
    }
    return *this;
}

Word& Word::operator*=(const Word& rhs) {
    const auto& r = rhs.letters_;
    std::size_t k = 0;
    while (k < r.size() && !letters_.empty() && letters_.back() == -r[k]) {
        letters_.pop_back();
        ++k;
    }
    if (letters_.size() + (r.size() - k) > max_word_length())
        throw WordLengthExceeded(letters_.size() + r.size() - k);
    letters_.insert(letters_.end(), r.begin() + static_cast<std::ptrdiff_t>(k), r.end());
    return *this;
}

std::size_t Word::support_rank() const {
    std::size_t m = 0;
    for (Letter l : letters_) m = std::max(m, letter_index(l) + 1);
    return m;
}

Word concat(const Word& u, const Word& v) {
    Word r = u;
    r *= v;
    return r;
}

Word invert(const Word& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    for (Letter& l : out) l = -l;
    return Word(std::move(out));
}

Word conjugate(const Word& a, const Word& b) {
    Word r = a;
    r *= b;
    r *= invert(a);
    return r;
}

Word power(const Word& w, long long n) {
    Word base = n < 0 ? invert(w) : w;
    unsigned long long k = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    Word r;
    for (unsigned long long i = 0; i < k; ++i) r *= base;
    return r;
}

Word commutator(const Word& u, const Word& v) {
    Word r = u;
    r *= v;
    r *= invert(u);
    r *= invert(v);
    return r;
}

std::string render(const Word& w, const Alphabet& a) {
    std::string s;
    for (Letter l : w.letters()) {
        if (!s.empty()) s += ' ';
        s += a.name(letter_index(l));
        if (l < 0) s += '\'';
    }
    return s;
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

struct WordAlgebra {
    using value_type = Word;
    const SymbolResolver& resolve;
    Word one() const { return Word(); }
    Word mul(const Word& a, const Word& b) const { return concat(a, b); }
    Word pow(const Word& a, long long n) const { return power(a, n); }
    Word inv(const Word& a) const { return invert(a); }
    Word conj(const Word& a, const Word& b) const { return conjugate(a, b); }
    Word symbol(const std::string& label) const { return resolve(label); }
};

}  // namespace

Word parse_expression(std::string_view text, const SymbolResolver& resolve) {
    WordAlgebra alg{resolve};
    return parse_with(text, alg);
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    return parse_expression(text, [&](const std::string& label) {
        std::size_t i = alphabet.find(label);
        if (i >= alphabet.rank()) throw std::invalid_argument("unknown generator '" + label + "'");
        return Word{make_letter(i, 1)};
    });
}

}  // namespace mcg
