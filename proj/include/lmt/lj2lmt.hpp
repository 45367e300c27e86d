#pragma once

#include "lmt/lj.hpp"
#include "lmt/lmt.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmt {

class LJTranslationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A partial LMT tree with one growth point: the open leaf at `path`, reached with `history`.
// A fragment whose growth branch closed on its own has no growth point.
struct Fragment {
    ProofTree tree;
    std::vector<std::size_t> path;
    BranchHistory history;
    bool growing = true;

    static Fragment start(const Sequent& s, const BranchHistory& h);
    ProofTree& growth();
    const Sequent& top() const;
    // Applies r at the growth point and moves to premise `next`.
    void extend(const Rule& r, std::size_t next = 0);
};

Fragment focus_wrap(Fragment f, const Formula& main);

// Restarts and follows the strategy until (main, goal) can be expanded again over a
// context containing gamma. Unchanged when the context was not tried since the last restart.
// Left premises of impl-left steps taken on the way are closed by search within search_cap.
Fragment proof_until(Fragment f, const Formula& main, const std::string& goal, const Formulas& gamma,
                     std::uint64_t max_steps, std::uint64_t search_cap);

enum class RowKind { Axiom, ImplRight, ImplLeftUnfocused, ImplLeftFocused, ImplLeftExpanded, Structural };

std::string row_name(RowKind k);

struct TableRow {
    std::string lj_path;
    RowKind kind;
    std::uint64_t lmt_nodes;
};

struct LJTranslation {
    ProofTree proof;
    std::vector<TableRow> table;
};

LJTranslation translate_lj_to_lmt(const LJProof& p);

// First row that breaks the size mapping (axiom and impl-right 1, unfocused 2, focused 1,
// expanded at most h, structural 0).
std::optional<TableRow> table_violation(const std::vector<TableRow>& rows, std::uint64_t h);

}  // namespace lmt
