#include "lmt/lj.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace lmt {

std::string lj_rule_name(LJRule r)
{
    switch (r) {
    case LJRule::Axiom: return "axiom";
    case LJRule::Weakening: return "weakening";
    case LJRule::Contraction: return "contraction";
    case LJRule::Exchange: return "exchange";
    case LJRule::Cut: return "cut";
    case LJRule::ImplRight: return "impl-right";
    case LJRule::ImplLeft: return "impl-left";
    }
    return "?";
}

std::optional<LJRule> lj_rule_from_name(const std::string& s)
{
    for (auto r : {LJRule::Axiom, LJRule::Weakening, LJRule::Contraction, LJRule::Exchange, LJRule::Cut,
                   LJRule::ImplRight, LJRule::ImplLeft})
        if (lj_rule_name(r) == s)
            return r;
    return std::nullopt;
}

std::size_t lj_arity(LJRule r)
{
    switch (r) {
    case LJRule::Axiom: return 0;
    case LJRule::Cut:
    case LJRule::ImplLeft: return 2;
    default: return 1;
    }
}

namespace {

// bag minus one occurrence of f
std::optional<Formulas> remove_one(Formulas bag, const Formula& f)
{
    auto it = std::find(bag.begin(), bag.end(), f);
    if (it == bag.end())
        return std::nullopt;
    bag.erase(it);
    return bag;
}

Formulas plus(Formulas bag, const Formula& f)
{
    bag.push_back(f);
    return bag;
}

std::optional<std::string> check_rule(const LJProof& p)
{
    const auto& n = p.node;
    const auto& c = p.children;
    switch (p.rule) {
    case LJRule::Axiom:
        if (!contains(n.antecedent, n.succedent))
            return "axiom: succedent not in antecedent";
        return std::nullopt;
    case LJRule::Weakening:
        if (!(c[0].node.succedent == n.succedent))
            return "weakening: succedent changed";
        for (const auto& f : n.antecedent)
            if (auto rest = remove_one(n.antecedent, f); rest && same_multiset(*rest, c[0].node.antecedent))
                return std::nullopt;
        return "weakening: premise is not the conclusion minus one formula";
    case LJRule::Contraction:
        if (!(c[0].node.succedent == n.succedent))
            return "contraction: succedent changed";
        for (const auto& f : n.antecedent)
            if (same_multiset(plus(n.antecedent, f), c[0].node.antecedent))
                return std::nullopt;
        return "contraction: premise is not the conclusion with one formula doubled";
    case LJRule::Exchange:
        if (!(c[0].node.succedent == n.succedent) || !same_multiset(c[0].node.antecedent, n.antecedent))
            return "exchange: premise differs beyond order";
        return std::nullopt;
    case LJRule::Cut: {
        const auto& l = c[0].node;
        const auto& r = c[1].node;
        if (!(r.succedent == n.succedent))
            return "cut: right premise succedent differs";
        auto gamma = remove_one(r.antecedent, l.succedent);
        if (!gamma)
            return "cut: cut formula missing from right premise";
        Formulas all = l.antecedent;
        all.insert(all.end(), gamma->begin(), gamma->end());
        if (!same_multiset(all, n.antecedent))
            return "cut: contexts do not combine to the conclusion";
        return std::nullopt;
    }
    case LJRule::ImplRight: {
        if (n.succedent.is_atom())
            return "impl-right: succedent is atomic";
        const auto& q = c[0].node;
        if (!(q.succedent == n.succedent.rhs()) || !same_multiset(q.antecedent, plus(n.antecedent, n.succedent.lhs())))
            return "impl-right: premise is not antecedent + a => b";
        return std::nullopt;
    }
    case LJRule::ImplLeft:
        if (!lj_main_formula(p))
            return "impl-left: premises do not match any implication of the antecedent";
        return std::nullopt;
    }
    return "unknown rule";
}

std::optional<Violation> check_at(const LJProof& p, const std::string& path)
{
    if (p.children.size() != lj_arity(p.rule))
        return Violation{path, lj_rule_name(p.rule) + " expects " + std::to_string(lj_arity(p.rule)) +
                                   " premises, found " + std::to_string(p.children.size())};
    if (auto e = check_rule(p))
        return Violation{path, *e};
    for (std::size_t i = 0; i < p.children.size(); ++i)
        if (auto v = check_at(p.children[i], path + "/" + std::to_string(i)))
            return v;
    return std::nullopt;
}

}  // namespace

std::optional<Formula> lj_main_formula(const LJProof& p)
{
    if (p.rule != LJRule::ImplLeft || p.children.size() != 2)
        return std::nullopt;
    const auto& n = p.node;
    const auto& l = p.children[0].node;
    const auto& r = p.children[1].node;
    if (!same_multiset(l.antecedent, n.antecedent) || !(r.succedent == n.succedent))
        return std::nullopt;
    for (const auto& x : n.antecedent)
        if (!x.is_atom() && x.lhs() == l.succedent && same_multiset(r.antecedent, plus(n.antecedent, x.rhs())))
            return x;
    return std::nullopt;
}

std::optional<Violation> check_lj_proof(const LJProof& p) { return check_at(p, ""); }

std::uint64_t height(const LJProof& p)
{
    std::uint64_t h = 0;
    for (const auto& c : p.children)
        h = std::max(h, height(c));
    return h + 1;
}

std::size_t size(const LJProof& p)
{
    std::size_t n = 1;
    for (const auto& c : p.children)
        n += size(c);
    return n;
}

bool same_proof(const LJProof& a, const LJProof& b)
{
    if (a.rule != b.rule || a.children.size() != b.children.size())
        return false;
    if (!(a.node.succedent == b.node.succedent) || !same_multiset(a.node.antecedent, b.node.antecedent))
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!same_proof(a.children[i], b.children[i]))
            return false;
    return true;
}

namespace {

using Key = std::pair<Formulas, Formula>;

// Backward search over set-form sequents. A failure that hit a sequent still on
// the branch stack is only cached once the search has returned past that sequent.
class Oracle {
public:
    explicit Oracle(bool record) : record_(record) {}

    std::optional<LJProof> run(const Formula& f)
    {
        auto r = solve({}, f, 0);
        if (!r.ok)
            return std::nullopt;
        if (!record_)
            return LJProof{};
        return proofs_.at(Key{{}, f});
    }

private:
    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    struct Result {
        bool ok;
        std::size_t low;
    };

    static Formulas with(const Formulas& gamma, const Formula& f)
    {
        Formulas g = gamma;
        if (!contains(g, f)) {
            g.push_back(f);
            std::sort(g.begin(), g.end());
        }
        return g;
    }

    // Premise proof for gamma + extra, padding with a weakening when extra is already in gamma.
    LJProof premise(const Formulas& gamma, const Formula& extra, const Formula& goal) const
    {
        if (!contains(gamma, extra))
            return proofs_.at(Key{with(gamma, extra), goal});
        LJProof w{{plus(gamma, extra), goal}, LJRule::Weakening, {proofs_.at(Key{gamma, goal})}};
        return w;
    }

    Result solve(const Formulas& gamma, const Formula& goal, std::size_t depth)
    {
        Key key{gamma, goal};
        if (proved_.contains(key))
            return {true, none};
        if (failed_.contains(key))
            return {false, none};
        if (auto it = stack_.find(key); it != stack_.end())
            return {false, it->second};

        stack_.emplace(key, depth);
        std::size_t low = none;
        bool ok = false;
        if (goal.is_atom() && contains(gamma, goal)) {
            ok = true;
            if (record_)
                proofs_[key] = LJProof{{gamma, goal}, LJRule::Axiom, {}};
        }
        if (!ok && !goal.is_atom()) {
            auto r = solve(with(gamma, goal.lhs()), goal.rhs(), depth + 1);
            low = std::min(low, r.low);
            if (r.ok) {
                ok = true;
                if (record_)
                    proofs_[key] = LJProof{{gamma, goal}, LJRule::ImplRight, {premise(gamma, goal.lhs(), goal.rhs())}};
            }
        }
        for (std::size_t i = 0; !ok && i < gamma.size(); ++i) {
            const Formula& x = gamma[i];
            if (x.is_atom())
                continue;
            auto l = solve(gamma, x.lhs(), depth + 1);
            low = std::min(low, l.low);
            if (!l.ok)
                continue;
            auto r = solve(with(gamma, x.rhs()), goal, depth + 1);
            low = std::min(low, r.low);
            if (r.ok) {
                ok = true;
                if (record_)
                    proofs_[key] = LJProof{{gamma, goal}, LJRule::ImplLeft,
                                           {proofs_.at(Key{gamma, x.lhs()}), premise(gamma, x.rhs(), goal)}};
            }
        }
        stack_.erase(key);
        if (ok) {
            proved_.insert(key);
            return {true, none};
        }
        if (low >= depth)
            failed_.insert(key);
        return {false, low};
    }

    bool record_;
    std::set<Key> proved_;
    std::set<Key> failed_;
    std::map<Key, std::size_t> stack_;
    std::map<Key, LJProof> proofs_;
};

}  // namespace

Verdict lj_decide(const Formula& f)
{
    return Oracle(false).run(f) ? Verdict::Theorem : Verdict::NonTheorem;
}

std::optional<LJProof> lj_prove(const Formula& f) { return Oracle(true).run(f); }

}  // namespace lmt
