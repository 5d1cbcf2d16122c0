#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcgkit/symplectic.hpp"
#include "mcgkit/word.hpp"

namespace mcg {

// pi_1 alphabet x1,y1,...,xg,yg; x_i has index 2(i-1), y_i has index 2(i-1)+1.
Alphabet pi1_alphabet(int g);
// Mapping-class generators in the order b2,b1,a1,e1,a2,...,e_{g-1},a_g (b2 omitted at g=1).
Alphabet mc_alphabet(int g);

class Timeout : public std::runtime_error {
public:
    Timeout() : std::runtime_error("timeout") {}
};

// Cooperative time limit; a default-constructed deadline never expires.
class Deadline {
public:
    Deadline() = default;
    explicit Deadline(std::chrono::milliseconds budget) : end_(std::chrono::steady_clock::now() + budget) {}
    bool expired() const { return end_ && std::chrono::steady_clock::now() > *end_; }
    void check() const {
        if (expired()) throw Timeout();
    }

private:
    std::optional<std::chrono::steady_clock::time_point> end_;
};

class Endo {
public:
    Endo() = default;
    Endo(int genus, std::vector<Word> images);
    static Endo identity(int genus);

    int genus() const { return genus_; }
    std::size_t rank() const { return images_.size(); }
    const std::vector<Word>& images() const { return images_; }
    const Word& image(std::size_t i) const { return images_.at(i); }
    bool is_identity() const;

    bool operator==(const Endo& o) const = default;

private:
    int genus_ = 0;
    std::vector<Word> images_;
};

Word apply(const Endo& phi, const Word& w);
Endo compose(const Endo& phi, const Endo& psi);  // phi after psi
bool equal(const Endo& phi, const Endo& psi);
SympMatrix abelianize(const Endo& phi);
// Conjugation x -> w x w^-1 on every basis letter.
Endo inner(int genus, const Word& w);

Word boundary_word(int g);

struct TwistEntry {
    std::string label;
    Endo forward;
    std::optional<Endo> inverse;
    HomologyClass cls;
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string entry, std::string check, const std::string& detail);
    const std::string& entry() const { return entry_; }
    const std::string& check() const { return check_; }

private:
    std::string entry_;
    std::string check_;
};

class TwistTable {
public:
    TwistTable() = default;
    TwistTable(int genus, std::vector<TwistEntry> entries);

    int genus() const { return genus_; }
    const Word& boundary() const { return boundary_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<TwistEntry>& entries() const { return entries_; }
    const TwistEntry& entry(std::size_t letter_index) const { return entries_.at(letter_index); }
    const TwistEntry& entry(const std::string& label) const;

    // Mapping-class word over alphabet(); letters act right to left.
    Endo evaluate(const Word& w, const Deadline& dl = {}) const;
    // Applies the mapping-class word to a single pi_1 element.
    Word act(const Word& mc, const Word& x, const Deadline& dl = {}) const;
    SympMatrix sp(const Word& w) const;

    // Runs V1..V5 and throws ValidationError on the first failure.
    void validate() const;

private:
    int genus_ = 0;
    Word boundary_;
    Alphabet alphabet_;
    std::vector<TwistEntry> entries_;  // indexed like alphabet_
};

Endo invert_generator(const TwistEntry& e);
Endo evaluate_word(const TwistTable& t, const Word& w, const Deadline& dl = {});
SympMatrix sp_of_word(const TwistTable& t, const Word& w);

// Twist automorphisms derived from the chain plumbing model (see docs/twist-model.md).
std::vector<TwistEntry> derive_twists(int g);
TwistTable load_twist_table(int g);  // built-in derivation, validated
TwistTable load_twist_table_file(int g, const std::string& path);  // validated
TwistTable parse_twist_table(int g, const std::string& text);      // not validated
std::string format_twist_table(const TwistTable& t);

// The (M1)-(M3) relators used by validation, as (lhs, rhs) text over primitive labels.
struct ValidationRelator {
    std::string id;
    std::string check;  // V3, V4, V5
    Word lhs, rhs;
};
std::vector<ValidationRelator> validation_relators(int g);

}  // namespace mcg
