#include "lmt/nd.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace lmt {

std::string nd_rule_name(NDRule r)
{
    switch (r) {
    case NDRule::Hypothesis: return "hypothesis";
    case NDRule::ImplIntro: return "impl-intro";
    case NDRule::ImplElim: return "impl-elim";
    }
    return "?";
}

std::optional<NDRule> nd_rule_from_name(const std::string& s)
{
    for (auto r : {NDRule::Hypothesis, NDRule::ImplIntro, NDRule::ImplElim})
        if (nd_rule_name(r) == s)
            return r;
    return std::nullopt;
}

namespace {

using Scope = std::map<int, Formula>;

std::optional<Violation> check_at(const NDProof& p, const Scope& scope, const std::string& path, Formulas& open)
{
    auto arity = [&](std::size_t n) -> std::optional<Violation> {
        if (p.children.size() != n)
            return Violation{path, nd_rule_name(p.rule) + " expects " + std::to_string(n) + " premises, found " +
                                       std::to_string(p.children.size())};
        return std::nullopt;
    };
    switch (p.rule) {
    case NDRule::Hypothesis: {
        if (auto v = arity(0))
            return v;
        auto it = scope.find(p.discharge);
        if (p.discharge == 0 || it == scope.end()) {
            open.push_back(p.conclusion);
            return std::nullopt;
        }
        if (!(it->second == p.conclusion))
            return Violation{path, "bad discharge: mark " + std::to_string(p.discharge) + " binds " +
                                       render(it->second) + ", not " + render(p.conclusion)};
        return std::nullopt;
    }
    case NDRule::ImplIntro: {
        if (auto v = arity(1))
            return v;
        if (p.conclusion.is_atom())
            return Violation{path, "schema mismatch: impl-intro concludes an atom"};
        if (!(p.children[0].conclusion == p.conclusion.rhs()))
            return Violation{path, "schema mismatch: premise does not conclude " + render(p.conclusion.rhs())};
        if (p.discharge <= 0)
            return Violation{path, "bad discharge: impl-intro needs a positive mark"};
        if (scope.contains(p.discharge))
            return Violation{path, "bad discharge: mark " + std::to_string(p.discharge) + " already bound"};
        Scope inner = scope;
        inner.emplace(p.discharge, p.conclusion.lhs());
        return check_at(p.children[0], inner, path + "/0", open);
    }
    case NDRule::ImplElim: {
        if (auto v = arity(2))
            return v;
        const auto& minor = p.children[0];
        const auto& major = p.children[1];
        if (major.conclusion.is_atom() || !(major.conclusion.lhs() == minor.conclusion) ||
            !(major.conclusion.rhs() == p.conclusion))
            return Violation{path, "schema mismatch: premises are not a and a -> " + render(p.conclusion)};
        if (major.rule == NDRule::ImplIntro)
            return Violation{path, "non-normal: major premise is concluded by impl-intro"};
        if (auto v = check_at(minor, scope, path + "/0", open))
            return v;
        return check_at(major, scope, path + "/1", open);
    }
    }
    return Violation{path, "unknown rule"};
}

Formulas plus(Formulas bag, const Formula& f)
{
    bag.push_back(f);
    return bag;
}

// d with its topmost principal elimination replaced by a hypothesis of that elimination's conclusion.
NDProof cut_topmost(const NDProof& d)
{
    if (d.children[1].rule == NDRule::Hypothesis)
        return NDProof{d.conclusion, NDRule::Hypothesis, 0, {}};
    NDProof out = d;
    out.children[1] = cut_topmost(d.children[1]);
    return out;
}

LJProof translate(const NDProof& d, const Formulas& gamma)
{
    switch (d.rule) {
    case NDRule::Hypothesis:
        if (!contains(gamma, d.conclusion))
            throw TranslationError("hypothesis " + render(d.conclusion) + " is not among the assumptions");
        return LJProof{{gamma, d.conclusion}, LJRule::Axiom, {}};
    case NDRule::ImplIntro: {
        Formulas inner = plus(gamma, d.conclusion.lhs());
        return LJProof{{gamma, d.conclusion}, LJRule::ImplRight, {translate(d.children[0], inner)}};
    }
    case NDRule::ImplElim: {
        const NDProof* top = &d;
        while (top->children[1].rule == NDRule::ImplElim)
            top = &top->children[1];
        const NDProof& major = top->children[1];
        if (major.rule != NDRule::Hypothesis)
            throw TranslationError("non-normal: principal branch does not start at an assumption");
        if (!contains(gamma, major.conclusion))
            throw TranslationError("major premise " + render(major.conclusion) + " is not among the assumptions");
        LJProof left = translate(top->children[0], gamma);
        LJProof right = translate(cut_topmost(d), plus(gamma, major.conclusion.rhs()));
        return LJProof{{gamma, d.conclusion}, LJRule::ImplLeft, {std::move(left), std::move(right)}};
    }
    }
    throw TranslationError("unknown rule");
}

}  // namespace

NDCheck check_nd_proof(const NDProof& p)
{
    NDCheck r;
    r.violation = check_at(p, {}, "", r.open);
    return r;
}

std::uint64_t height(const NDProof& p)
{
    std::uint64_t h = 0;
    for (const auto& c : p.children)
        h = std::max(h, height(c));
    return h + 1;
}

LJProof translate_nd_to_lj(const NDProof& p, const Formulas& hypotheses)
{
    auto c = check_nd_proof(p);
    if (c.violation)
        throw TranslationError("input does not check at '" + c.violation->path + "': " + c.violation->reason);
    for (const auto& h : c.open)
        if (!contains(hypotheses, h))
            throw TranslationError("open hypothesis " + render(h) + " not supplied");
    return translate(p, as_set(hypotheses));
}

std::uint64_t nd_height_bound(const Formula& f)
{
    constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = static_cast<std::uint64_t>(f.degree());
    for (int i = 0; i < f.degree() + 1; ++i)
        r = (r > max / 2) ? max : r * 2;
    return r;
}

}  // namespace lmt
