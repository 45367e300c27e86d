#pragma once

#include "lmt/formula.hpp"
#include "lmt/lj.hpp"
#include "lmt/violation.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lmt {

enum class NDRule { Hypothesis, ImplIntro, ImplElim };

std::string nd_rule_name(NDRule r);
std::optional<NDRule> nd_rule_from_name(const std::string& s);

// impl-elim children are (minor, major). A hypothesis with mark 0, or with a mark
// no enclosing impl-intro binds, is open.
struct NDProof {
    Formula conclusion;
    NDRule rule = NDRule::Hypothesis;
    int discharge = 0;
    std::vector<NDProof> children;
};

struct NDCheck {
    std::optional<Violation> violation;
    Formulas open;
};

NDCheck check_nd_proof(const NDProof& p);

std::uint64_t height(const NDProof& p);

class TranslationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

LJProof translate_nd_to_lj(const NDProof& p, const Formulas& hypotheses = {});

// degree * 2^(degree+1), saturating at UINT64_MAX.
std::uint64_t nd_height_bound(const Formula& f);

}  // namespace lmt
