#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcgkit/autfree.hpp"
#include "mcgkit/catalog.hpp"
#include "mcgkit/symplectic.hpp"

namespace mcg {

enum class Rep { Pi1, Sp };
std::string rep_name(Rep r);
Rep parse_rep(const std::string& s);

// Exponent of the boundary word in the conjugation realized by the boundary twist.
inline constexpr int kBoundarySign = 1;

struct Pi1Value {
    Endo f, inv;
};
struct SpValue {
    SympMatrix f, inv;
};

// Evaluates expressions over catalog symbols; composite symbols are evaluated once and memoized.
// Not thread-safe; use one instance per thread.
class Evaluator {
public:
    explicit Evaluator(const TwistTable& table, bool mirrored = false);

    const TwistTable& table() const { return *table_; }
    bool mirrored() const { return mirrored_; }
    int genus() const { return table_->genus(); }

    Pi1Value pi1(const std::string& text, const Deadline& dl = {});
    SpValue sp(const std::string& text);
    const Pi1Value& pi1_symbol(const std::string& label, const Deadline& dl = {});
    const SpValue& sp_symbol(const std::string& label);

private:
    const TwistTable* table_;
    bool mirrored_;
    std::map<std::string, Pi1Value> pi1_memo_;
    std::map<std::string, SpValue> sp_memo_;
};

struct Witness {
    std::string where;  // basis letter or matrix cell
    std::string lhs, rhs;
};

struct CheckResult {
    enum class Status { Holds, Fails, Skipped };
    std::string id, tag;
    int genus = 0;
    Rep rep = Rep::Pi1;
    Status status = Status::Skipped;
    std::string reason;  // for skipped
    double ms = 0;
    std::optional<Witness> witness;
    bool expected_fail = false;

    bool unexpected() const;
};
std::string status_name(CheckResult::Status s);

struct Report {
    std::string suite;
    int genus = 0;
    std::vector<CheckResult> results;

    std::size_t count(CheckResult::Status s) const;
    std::size_t unexpected() const;
};

struct CheckOptions {
    std::chrono::milliseconds timeout{60'000};
};

// Checks one relator; evaluators are reused so composite symbols are shared across checks.
CheckResult check_relator(const Relator& rel, Evaluator& ev, Evaluator& mirror_ev, Rep rep,
                          const CheckOptions& opt = {});
CheckResult check_relator(const Relator& rel, const TwistTable& table, Rep rep, const CheckOptions& opt = {});

// Serial reference path.
std::vector<CheckResult> check_relators_serial(const std::vector<Relator>& rels, const TwistTable& table, Rep rep,
                                               const CheckOptions& opt = {});
// Parallel kernel (OpenMP when available); results in input order, identical to the serial path.
std::vector<CheckResult> check_relators_parallel(const std::vector<Relator>& rels, const TwistTable& table, Rep rep,
                                                 int jobs, const CheckOptions& opt = {});

// Results sorted by relator id.
Report check_presentation(const Presentation& pres, const TwistTable& table, Rep rep, int jobs = 1,
                          const CheckOptions& opt = {});

Report run_negative_controls(int g, const CheckOptions& opt = {});

struct SuiteOptions {
    int genus = 0;  // 0: the suite's default genera
    std::vector<Rep> reps{Rep::Pi1};
    int jobs = 1;
    CheckOptions check;
};

std::vector<std::string> suite_names();
// Relator ids expected to fail in the pi1 representation for a suite.
std::set<std::string> expected_failures(const std::string& suite, Rep rep);
// Runs a suite; with both representations, sp runs first. Throws std::invalid_argument on bad names or genera.
std::vector<Report> run_suite(const std::string& suite, const SuiteOptions& opt);

// Relators where sp fails but pi1 holds (a representation bug).
std::vector<std::string> representation_discrepancies(const std::vector<Report>& reports);

std::string result_json(const CheckResult& r);
std::string summary_json(const std::vector<Report>& reports);

}  // namespace mcg
