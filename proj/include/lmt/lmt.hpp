#pragma once

#include "lmt/formula.hpp"
#include "lmt/violation.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace lmt {

struct Bag {
    std::string label;
    Formulas content;

    friend bool operator==(const Bag&, const Bag&) = default;
};

// {focus}, bags, delta => [labels], goal
struct Sequent {
    Formulas focus;
    std::vector<Bag> bags;
    Formulas delta;
    std::vector<std::string> labels;
    Formula goal;

    friend bool operator==(const Sequent&, const Sequent&) = default;
};

Sequent initial_sequent(const Formula& f);

// Same sequent up to focus as a set and bag/delta contents as multisets.
bool equivalent(const Sequent& a, const Sequent& b);

std::vector<std::string> bag_labels(const std::vector<Bag>& bags);

enum class RuleKind { Axiom, Focus, Restart, ImplRight, ImplLeft, OpenLeaf };

enum class OpenReason { Saturated, Cap };

struct Rule {
    RuleKind kind = RuleKind::Axiom;
    Formula formula{};        // focus and impl-left
    std::string atom{};       // restart
    std::size_t index = 0;    // restart: position of the bag
    OpenReason reason = OpenReason::Saturated;

    static Rule axiom() { return {}; }
    static Rule focus(Formula f) { return {.kind = RuleKind::Focus, .formula = std::move(f)}; }
    static Rule impl_right() { return {.kind = RuleKind::ImplRight}; }
    static Rule impl_left(Formula f) { return {.kind = RuleKind::ImplLeft, .formula = std::move(f)}; }
    static Rule restart(std::string p, std::size_t idx)
    {
        return {.kind = RuleKind::Restart, .atom = std::move(p), .index = idx};
    }
    static Rule open(OpenReason r) { return {.kind = RuleKind::OpenLeaf, .reason = r}; }
};

std::string rule_name(RuleKind k);
std::optional<RuleKind> rule_from_name(const std::string& s);

class RuleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Premises of s under r, bottom-up. Throws RuleError when a side condition fails.
std::vector<Sequent> apply_rule(const Sequent& s, const Rule& r);

// Appends (q, content) unless a q-bag already holds it; q-bags it subsumes are dropped.
std::vector<Bag> push_bag(std::vector<Bag> bags, const std::string& q, const Formulas& content);

// (a -> b, q) tried under a given delta set.
struct Context {
    Formula formula;
    std::string goal_atom;
    Formulas delta_set;

    friend bool operator==(const Context&, const Context&) = default;
    friend auto operator<=>(const Context& a, const Context& b)
    {
        if (auto c = a.formula <=> b.formula; c != 0)
            return c;
        if (auto c = a.goal_atom.compare(b.goal_atom) <=> 0; c != 0)
            return c;
        return std::lexicographical_compare_three_way(a.delta_set.begin(), a.delta_set.end(),
                                                      b.delta_set.begin(), b.delta_set.end());
    }
};

Context context_of(const Sequent& s, const Formula& main);

struct BranchHistory {
    std::set<Context> tried_contexts;
    std::vector<std::string> restarted_atoms;
    std::uint64_t depth = 0;

    // History of the premise reached by applying r.
    BranchHistory after(const Sequent& s, const Rule& r) const;
};

struct Step {
    bool saturated = false;
    Rule rule;
};

Step next_step(const Sequent& s, const BranchHistory& h);

struct ProofTree {
    Sequent node;
    Rule rule;
    std::vector<ProofTree> children;
};

bool is_closed(const ProofTree& t);
std::uint64_t height(const ProofTree& t);
std::size_t size(const ProofTree& t);
void collect_open_leaves(const ProofTree& t, std::vector<const ProofTree*>& out);

struct SearchOptions {
    std::optional<std::uint64_t> max_depth;
};

struct SearchOutcome {
    bool proved = false;
    ProofTree tree;
};

SearchOutcome search(const Formula& f, const SearchOptions& opt = {});
// Expands from an arbitrary sequent with its branch history.
ProofTree search_from(const Sequent& s, const BranchHistory& h, std::uint64_t cap);

struct CheckOptions {
    bool allow_open = false;
};

// Empty result means the tree checks.
std::optional<Violation> check_lmt_proof(const ProofTree& t, const CheckOptions& opt = {});

// Invariants every strategy-produced node satisfies; returns the first broken one.
std::optional<std::string> sequent_invariant_violation(const Sequent& s);

// degree^3 * 2^(degree+1), saturating at UINT64_MAX.
std::uint64_t lmt_height_bound(const Formula& f);
// degree^2: most LMT nodes a single translated impl-left may expand into.
std::uint64_t expansion_bound(const Formula& f);

}  // namespace lmt
