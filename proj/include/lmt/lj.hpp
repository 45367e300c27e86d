#pragma once

#include "lmt/formula.hpp"
#include "lmt/violation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lmt {

struct LJSequent {
    Formulas antecedent;
    Formula succedent;

    friend bool operator==(const LJSequent&, const LJSequent&) = default;
};

enum class LJRule { Axiom, Weakening, Contraction, Exchange, Cut, ImplRight, ImplLeft };

std::string lj_rule_name(LJRule r);
std::optional<LJRule> lj_rule_from_name(const std::string& s);
std::size_t lj_arity(LJRule r);

struct LJProof {
    LJSequent node;
    LJRule rule = LJRule::Axiom;
    std::vector<LJProof> children;
};

std::optional<Violation> check_lj_proof(const LJProof& p);

// Main formula of an impl-left node, recovered from its premises.
std::optional<Formula> lj_main_formula(const LJProof& p);

std::uint64_t height(const LJProof& p);
std::size_t size(const LJProof& p);

// Same rules and shape, sequents equal as multisets.
bool same_proof(const LJProof& a, const LJProof& b);

enum class Verdict { Theorem, NonTheorem };

Verdict lj_decide(const Formula& f);
// Cut-free proof of => f, or nothing for non-theorems.
std::optional<LJProof> lj_prove(const Formula& f);

}  // namespace lmt
