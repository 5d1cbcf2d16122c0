#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcg {

// A letter is packed as a signed integer: +(i+1) for generator i, -(i+1) for its inverse.
using Letter = std::int32_t;

inline Letter make_letter(std::size_t index, int sign) {
    Letter l = static_cast<Letter>(index) + 1;
    return sign < 0 ? -l : l;
}
inline std::size_t letter_index(Letter l) { return static_cast<std::size_t>(l < 0 ? -l : l) - 1; }
inline int letter_sign(Letter l) { return l < 0 ? -1 : 1; }

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t rank() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    // Returns rank() when the label is absent.
    std::size_t find(std::string_view label) const;
    bool contains(std::string_view label) const { return find(label) < rank(); }

    bool operator==(const Alphabet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

class WordLengthExceeded : public std::runtime_error {
public:
    explicit WordLengthExceeded(std::size_t len);
};

// Upper bound on stored word length; read once from MCGKIT_MAX_WORD_LEN (default 10^6).
std::size_t max_word_length();
void set_max_word_length(std::size_t n);

// Freely reduced word. Reduction is a constructor invariant.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    // Appends with cancellation at the junction.
    Word& operator*=(const Word& rhs);
    Word& push(Letter l);

    bool operator==(const Word& o) const = default;
    auto operator<=>(const Word& o) const = default;

    // Largest generator index + 1 used by the word (0 for the empty word).
    std::size_t support_rank() const;

private:
    std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
Word conjugate(const Word& a, const Word& b);  // a b a^-1
Word power(const Word& w, long long n);
Word commutator(const Word& u, const Word& v);  // u v u^-1 v^-1

// Free reduction of an arbitrary letter sequence.
std::vector<Letter> free_reduce(std::vector<Letter> letters);

// Renders as space-separated labels with a trailing ' for inverse letters.
std::string render(const Word& w, const Alphabet& a);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Maps a label token (plain identifier or "d(i,j)") to its word; throws ParseError
// (or anything else) for unknown labels.
using SymbolResolver = std::function<Word(const std::string& label)>;

Word parse_expression(std::string_view text, const SymbolResolver& resolve);
Word parse_word(std::string_view text, const Alphabet& alphabet);

}  // namespace mcg
