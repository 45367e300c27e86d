#include "lmt/lmt.hpp"

#include <algorithm>
#include <limits>

namespace lmt {

Sequent initial_sequent(const Formula& f)
{
    Sequent s;
    s.goal = f;
    return s;
}

std::vector<std::string> bag_labels(const std::vector<Bag>& bags)
{
    std::vector<std::string> out;
    for (const auto& b : bags)
        out.push_back(b.label);
    return out;
}

bool equivalent(const Sequent& a, const Sequent& b)
{
    if (!(a.goal == b.goal) || a.labels != b.labels || a.bags.size() != b.bags.size())
        return false;
    if (!same_set(a.focus, b.focus) || !same_multiset(a.delta, b.delta))
        return false;
    for (std::size_t i = 0; i < a.bags.size(); ++i)
        if (a.bags[i].label != b.bags[i].label || !same_multiset(a.bags[i].content, b.bags[i].content))
            return false;
    return true;
}

std::string rule_name(RuleKind k)
{
    switch (k) {
    case RuleKind::Axiom: return "axiom";
    case RuleKind::Focus: return "focus";
    case RuleKind::Restart: return "restart";
    case RuleKind::ImplRight: return "impl-right";
    case RuleKind::ImplLeft: return "impl-left";
    case RuleKind::OpenLeaf: return "open-leaf";
    }
    return "?";
}

std::optional<RuleKind> rule_from_name(const std::string& s)
{
    for (auto k : {RuleKind::Axiom, RuleKind::Focus, RuleKind::Restart, RuleKind::ImplRight,
                   RuleKind::ImplLeft, RuleKind::OpenLeaf})
        if (rule_name(k) == s)
            return k;
    return std::nullopt;
}

std::vector<Bag> push_bag(std::vector<Bag> bags, const std::string& q, const Formulas& content)
{
    for (const auto& b : bags)
        if (b.label == q && subset_of(content, b.content))
            return bags;
    std::erase_if(bags, [&](const Bag& b) { return b.label == q && subset_of(b.content, content); });
    bags.push_back({q, content});
    return bags;
}

std::vector<Sequent> apply_rule(const Sequent& s, const Rule& r)
{
    switch (r.kind) {
    case RuleKind::Axiom:
        if (!s.goal.is_atom())
            throw RuleError("axiom: goal is not atomic");
        if (!contains(s.delta, s.goal))
            throw RuleError("axiom: goal " + render(s.goal) + " not in context");
        return {};
    case RuleKind::Focus: {
        if (!contains(s.delta, r.formula))
            throw RuleError("focus: " + render(r.formula) + " not in context");
        if (contains(s.focus, r.formula))
            throw RuleError("focus: " + render(r.formula) + " already focused");
        Sequent p = s;
        p.focus.push_back(r.formula);
        return {p};
    }
    case RuleKind::ImplRight: {
        if (s.goal.is_atom())
            throw RuleError("impl-right: goal is atomic");
        Sequent p = s;
        p.delta.push_back(s.goal.lhs());
        p.goal = s.goal.rhs();
        return {p};
    }
    case RuleKind::ImplLeft: {
        if (r.formula.degree() == 0 || r.formula.is_atom())
            throw RuleError("impl-left: main formula is not an implication");
        if (!contains(s.focus, r.formula))
            throw RuleError("impl-left: " + render(r.formula) + " not focused");
        if (!s.goal.is_atom())
            throw RuleError("impl-left: goal is not atomic");
        Sequent left = s;
        left.bags = push_bag(s.bags, s.goal.name(), s.delta);
        left.labels = bag_labels(left.bags);
        left.goal = r.formula.lhs();
        Sequent right = s;
        right.delta.push_back(r.formula.rhs());
        return {left, right};
    }
    case RuleKind::Restart: {
        if (!s.goal.is_atom())
            throw RuleError("restart: goal is not atomic");
        if (r.index >= s.bags.size() || s.bags[r.index].label != r.atom)
            throw RuleError("restart: no bag labelled " + r.atom + " at position " + std::to_string(r.index));
        Sequent p;
        p.delta = s.bags[r.index].content;
        p.bags = s.bags;
        p.bags.erase(p.bags.begin() + static_cast<std::ptrdiff_t>(r.index));
        p.bags = push_bag(std::move(p.bags), s.goal.name(), s.delta);
        p.labels = bag_labels(p.bags);
        p.goal = Formula::atom(r.atom);
        return {p};
    }
    case RuleKind::OpenLeaf:
        return {};
    }
    throw RuleError("unknown rule");
}

Context context_of(const Sequent& s, const Formula& main)
{
    return {main, s.goal.is_atom() ? s.goal.name() : render(s.goal), as_set(s.delta)};
}

BranchHistory BranchHistory::after(const Sequent& s, const Rule& r) const
{
    BranchHistory h = *this;
    h.depth++;
    if (r.kind == RuleKind::ImplLeft)
        h.tried_contexts.insert(context_of(s, r.formula));
    if (r.kind == RuleKind::Restart) {
        h.tried_contexts.clear();
        h.restarted_atoms.push_back(r.atom);
    }
    return h;
}

namespace {

struct Component {
    Formulas set;
    Formula goal;
};

std::vector<Component> components(const Sequent& s)
{
    std::vector<Component> out;
    for (const auto& b : s.bags)
        out.push_back({as_set(b.content), Formula::atom(b.label)});
    out.push_back({as_set(s.delta), s.goal});
    return out;
}

// Some component above gamma already refutes the antecedent of x.
bool witnessed(const std::vector<Component>& comps, const Formulas& gamma, const Formula& x)
{
    auto [ps, head] = premises_and_head(x.lhs());
    Formulas need = gamma;
    need.insert(need.end(), ps.begin(), ps.end());
    return std::any_of(comps.begin(), comps.end(), [&](const Component& c) {
        return c.goal == head && subset_of(need, c.set);
    });
}

const Formula* unwitnessed(const std::vector<Component>& comps, const Formulas& gamma, const Formulas& order)
{
    for (const auto& x : order) {
        if (x.is_atom() || contains(gamma, x.rhs()))
            continue;
        if (!witnessed(comps, gamma, x))
            return &x;
    }
    return nullptr;
}

}  // namespace

Step next_step(const Sequent& s, const BranchHistory& h)
{
    if (s.goal.is_atom() && contains(s.focus, s.goal))
        return {false, Rule::axiom()};
    if (!s.goal.is_atom())
        return {false, Rule::impl_right()};
    if (contains(s.delta, s.goal))
        return {false, Rule::focus(s.goal)};
    for (const auto& x : s.delta)
        if (!contains(s.focus, x))
            return {false, Rule::focus(x)};

    auto comps = components(s);
    Formulas gamma = as_set(s.delta);
    for (const auto& x : s.focus) {
        if (x.is_atom() || contains(gamma, x.rhs()) || witnessed(comps, gamma, x))
            continue;
        if (h.tried_contexts.contains(context_of(s, x)))
            continue;
        return {false, Rule::impl_left(x)};
    }
    for (std::size_t i = 0; i < s.bags.size(); ++i) {
        const auto& b = s.bags[i];
        if (contains(b.content, Formula::atom(b.label)) || unwitnessed(comps, as_set(b.content), b.content))
            return {false, Rule::restart(b.label, i)};
    }
    return {true, Rule::open(OpenReason::Saturated)};
}

bool is_closed(const ProofTree& t)
{
    if (t.rule.kind == RuleKind::OpenLeaf)
        return false;
    return std::all_of(t.children.begin(), t.children.end(), [](const ProofTree& c) { return is_closed(c); });
}

std::uint64_t height(const ProofTree& t)
{
    if (t.rule.kind == RuleKind::OpenLeaf)
        return 0;
    std::uint64_t h = 0;
    for (const auto& c : t.children)
        h = std::max(h, height(c));
    return h + 1;
}

std::size_t size(const ProofTree& t)
{
    std::size_t n = 1;
    for (const auto& c : t.children)
        n += size(c);
    return n;
}

void collect_open_leaves(const ProofTree& t, std::vector<const ProofTree*>& out)
{
    if (t.rule.kind == RuleKind::OpenLeaf)
        out.push_back(&t);
    for (const auto& c : t.children)
        collect_open_leaves(c, out);
}

std::optional<std::string> sequent_invariant_violation(const Sequent& s)
{
    for (const auto& f : s.focus)
        if (!contains(s.delta, f))
            return "focused formula " + render(f) + " not in context";
    if (s.labels != bag_labels(s.bags))
        return "labels differ from bag labels";
    return std::nullopt;
}

ProofTree search_from(const Sequent& s, const BranchHistory& h, std::uint64_t cap)
{
    if (auto v = sequent_invariant_violation(s))
        throw std::logic_error("search produced an ill-formed sequent: " + *v);
    ProofTree t{s, Rule::open(OpenReason::Cap), {}};
    if (h.depth >= cap)
        return t;
    Step st = next_step(s, h);
    t.rule = st.rule;
    if (st.saturated)
        return t;
    BranchHistory next = h.after(s, st.rule);
    for (const auto& p : apply_rule(s, st.rule))
        t.children.push_back(search_from(p, next, cap));
    return t;
}

SearchOutcome search(const Formula& f, const SearchOptions& opt)
{
    std::uint64_t cap = opt.max_depth ? *opt.max_depth : lmt_height_bound(f);
    SearchOutcome out;
    out.tree = search_from(initial_sequent(f), {}, cap);
    out.proved = is_closed(out.tree);
    return out;
}

namespace {

std::string child_path(const std::string& p, std::size_t i) { return p + "/" + std::to_string(i); }

std::optional<Violation> check_node(const ProofTree& t, const BranchHistory& h, const std::string& path,
                                    const CheckOptions& opt)
{
    if (t.rule.kind == RuleKind::OpenLeaf) {
        if (!opt.allow_open)
            return Violation{path, "open leaf in a proof"};
        if (!t.children.empty())
            return Violation{path, "open leaf with premises"};
        return std::nullopt;
    }
    if (t.rule.kind == RuleKind::ImplLeft && t.node.goal.is_atom() &&
        h.tried_contexts.contains(context_of(t.node, t.rule.formula)))
        return Violation{path, "context (" + render(t.rule.formula) + ", " + t.node.goal.name() +
                                   ") reused without an intervening restart"};
    std::vector<Sequent> premises;
    try {
        premises = apply_rule(t.node, t.rule);
    } catch (const RuleError& e) {
        return Violation{path, e.what()};
    }
    if (premises.size() != t.children.size())
        return Violation{path, rule_name(t.rule.kind) + " expects " + std::to_string(premises.size()) +
                                   " premises, found " + std::to_string(t.children.size())};
    BranchHistory next = h.after(t.node, t.rule);
    for (std::size_t i = 0; i < premises.size(); ++i) {
        if (!equivalent(premises[i], t.children[i].node))
            return Violation{child_path(path, i), "premise does not match the " + rule_name(t.rule.kind) + " schema"};
        if (auto v = check_node(t.children[i], next, child_path(path, i), opt))
            return v;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Violation> check_lmt_proof(const ProofTree& t, const CheckOptions& opt)
{
    return check_node(t, {}, "", opt);
}

std::uint64_t lmt_height_bound(const Formula& f)
{
    constexpr std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t d = static_cast<std::uint64_t>(f.degree());
    std::uint64_t r = d;
    for (int i = 0; i < 2; ++i)
        r = (r > max / d) ? max : r * d;
    for (std::uint64_t i = 0; i < d + 1; ++i)
        r = (r > max / 2) ? max : r * 2;
    return r;
}

std::uint64_t expansion_bound(const Formula& f)
{
    std::uint64_t d = static_cast<std::uint64_t>(f.degree());
    return d * d;
}

}  // namespace lmt
