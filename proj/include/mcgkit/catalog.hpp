#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcgkit/autfree.hpp"
#include "mcgkit/word.hpp"

namespace mcg {

// A relation lhs = rhs between expressions over catalog symbols.
struct Relator {
    enum class Kind {
        Equation,
        // lhs acts on pi_1 as conjugation by the boundary word (rhs unused).
        BoundaryTwist,
    };

    std::string id;
    std::string tag;
    std::string lhs;
    std::string rhs;
    int min_genus = 1;
    Kind kind = Kind::Equation;
    bool mirror_lhs = false;  // replace every primitive letter of lhs by its inverse, keeping order
    bool sp_only = false;     // holds only in a quotient; checked in the symplectic representation

    std::string display() const;
};

struct Presentation {
    std::string name;
    int genus = 0;
    std::vector<std::string> generators;
    std::vector<Relator> relators;
};

// Signed hole indices -g..-1,1..g in increasing order.
std::vector<int> index_set(int g);

struct IndexPair {
    int i = 0, j = 0;
    auto operator<=>(const IndexPair&) const = default;
    std::string label() const;  // "d(i,j)"
};
std::vector<IndexPair> index_pairs(int g);

struct Move {
    enum class Kind { T, TInv, S, SInv, TD };  // t_k, t_k^-1, s, s^-1, t_k^-1 d(k,k+1)
    Kind kind;
    int k = 0;
    std::string text() const;
};
std::vector<Move> all_moves(int g);

// Image of delta(i,j) under the move, or nullopt when the image is not of the form delta(p,q).
std::optional<IndexPair> index_action(const Move& m, IndexPair p, int g);

// Defining expression of a composite symbol at genus g; nullopt for primitive generators.
// Throws std::invalid_argument for unknown symbols or indices out of range.
std::optional<std::string> symbol_definition(const std::string& label, int g);
bool is_known_symbol(const std::string& label, int g);
Word expand_symbol(const std::string& label, int g);
Word expand_expression(const std::string& text, int g);
// Every primitive letter replaced by its inverse, order kept.
Word mirror(const Word& w);

// For symbols that are Dehn twists: conjugator text and base twist (the base is
// primitive, another twist symbol, or "sep" for a separating curve).
std::optional<std::pair<std::string, std::string>> twist_structure(const std::string& label, int g);
std::vector<std::string> twist_symbols(int g);
HomologyClass symbol_class(const TwistTable& table, const std::string& label);

std::vector<Relator> expand_M1(int g);
std::vector<Relator> expand_P_family(const std::string& family, int g);  // "P1".."P11" or "P2a".."P2d"
std::vector<Relator> expand_Q(int n, int g);

Presentation presentation(const std::string& name, int g);
std::vector<std::string> presentation_names();

// Fixture relators for sec4, sec5, sec6, lemma4, lantern; instances needing more than g handles are omitted.
std::vector<Relator> fixture_relations(const std::string& section, int g);
std::vector<std::string> fixture_sections();

std::vector<std::pair<std::string, std::string>> dictionary_errata(int g);

std::string export_presentation(const Presentation& p);
Presentation parse_presentation(const std::string& text);

}  // namespace mcg
