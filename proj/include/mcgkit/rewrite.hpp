#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcgkit/autfree.hpp"
#include "mcgkit/catalog.hpp"
#include "mcgkit/word.hpp"

namespace mcg {

// An equation between letter patterns, usable in either direction.
struct Rule {
    std::string id;
    std::vector<Letter> lhs, rhs;
};

class RuleSet {
public:
    explicit RuleSet(Alphabet alphabet);
    // Braid and commutation rules of the (M1) relations at genus g; optionally (M2) as an equation.
    static RuleSet from_M1(int g, bool with_M2 = false);

    void add_braid(const std::string& x, const std::string& y);
    void add_commute(const std::string& x, const std::string& y);
    void add_equation(const std::string& id, const Word& lhs, const Word& rhs);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const Rule& rule(const std::string& id) const;
    bool has_rule(const std::string& id) const { return index_.count(id) > 0; }
    const std::vector<std::pair<std::string, std::string>>& braided() const { return braided_; }
    const std::vector<std::pair<std::string, std::string>>& commuting() const { return commuting_; }

private:
    Alphabet alphabet_;
    std::vector<Rule> rules_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::pair<std::string, std::string>> braided_, commuting_;

    std::size_t letter(const std::string& x) const;
    void add(Rule r);
    void check_fresh(const std::string& x, const std::string& y) const;
};

struct DerivationStep {
    std::string rule;
    std::size_t pos = 0;
    bool forward = true;  // lhs -> rhs
    bool operator==(const DerivationStep&) const = default;
};

// Asserts the word after the first `after` steps.
struct Checkpoint {
    std::size_t after = 0;
    Word word;
};

struct DerivationScript {
    int genus = 0;
    Word start;
    std::vector<DerivationStep> steps;
    Word end;
    std::vector<Checkpoint> checks;
};

class StepError : public std::runtime_error {
public:
    StepError(std::size_t index, const std::string& msg);
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

Word apply_step(const Word& w, const DerivationStep& step, const RuleSet& rules);
// Returns the final word; throws StepError naming the first failing step or checkpoint (1-based).
Word replay(const DerivationScript& script, const RuleSet& rules);
// Every intermediate word, start first.
std::vector<Word> replay_trace(const DerivationScript& script, const RuleSet& rules);

struct SearchConfig {
    int max_steps = 20;
    std::size_t max_length = 0;  // 0: 2*max(|lhs|,|rhs|)+8
    std::size_t max_states = 2'000'000;
};

// Bidirectional breadth-first search; nullopt is inconclusive.
std::optional<DerivationScript> search(const Word& lhs, const Word& rhs, const RuleSet& rules, const SearchConfig& cfg = {});

// Script text: optional `genus: <g>`, `start: <word>`, `step: <rule> @ <pos> fwd|bwd`,
// optional `check: <word>` after any step, `end: <word>`; '#' starts a comment line.
DerivationScript parse_script(const std::string& text);
DerivationScript load_script_file(const std::string& path);
std::string format_script(const DerivationScript& script);

// Tietze transformations.
class TietzeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TietzeMove {
    enum class Kind { AddRelator, AddGenerator, RemoveGenerator };
    Kind kind;
    Relator relator;         // AddRelator
    std::string generator;   // AddGenerator, RemoveGenerator
    std::string definition;  // AddGenerator
};

// AddRelator is accepted only when the relator holds in the pi1 representation at the presentation's genus.
Presentation tietze(const Presentation& pres, const TietzeMove& move);
// Replaces every occurrence of the label in an expression by the parenthesized replacement.
std::string substitute_symbol(const std::string& text, const std::string& label, const std::string& replacement);

}  // namespace mcg
