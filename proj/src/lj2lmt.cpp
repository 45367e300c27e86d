#include "lmt/lj2lmt.hpp"

#include <limits>

namespace lmt {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b)
{
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

}  // namespace

Fragment Fragment::start(const Sequent& s, const BranchHistory& h)
{
    return Fragment{ProofTree{s, Rule::open(OpenReason::Saturated), {}}, {}, h, true};
}

ProofTree& Fragment::growth()
{
    ProofTree* t = &tree;
    for (auto i : path)
        t = &t->children[i];
    return *t;
}

const Sequent& Fragment::top() const
{
    const ProofTree* t = &tree;
    for (auto i : path)
        t = &t->children[i];
    return t->node;
}

void Fragment::extend(const Rule& r, std::size_t next)
{
    ProofTree& g = growth();
    auto premises = apply_rule(g.node, r);
    g.rule = r;
    for (auto& p : premises)
        g.children.push_back(ProofTree{std::move(p), Rule::open(OpenReason::Saturated), {}});
    history = history.after(g.node, r);
    if (premises.empty()) {
        growing = false;
        return;
    }
    path.push_back(next);
}

Fragment focus_wrap(Fragment f, const Formula& main)
{
    if (!f.growing)
        return f;
    if (!contains(f.top().delta, main))
        throw LJTranslationError("focus: " + render(main) + " is not in the context");
    if (!contains(f.top().focus, main))
        f.extend(Rule::focus(main));
    return f;
}

Fragment proof_until(Fragment f, const Formula& main, const std::string& goal, const Formulas& gamma,
                     std::uint64_t max_steps, std::uint64_t search_cap)
{
    auto available = [&] {
        const Sequent& s = f.top();
        return s.goal.is_atom() && s.goal.name() == goal && !f.history.tried_contexts.contains(context_of(s, main)) &&
               subset_of(gamma, s.delta);
    };
    if (!f.growing || available())
        return f;
    if (f.top().bags.empty())
        throw LJTranslationError("restart needed for (" + render(main) + ", " + goal + ") but no label is available");
    f.extend(Rule::restart(f.top().bags[0].label, 0));
    for (std::uint64_t steps = 1; f.growing && !available(); ++steps) {
        if (steps >= max_steps)
            throw LJTranslationError("context (" + render(main) + ", " + goal + ") not available after " +
                                     std::to_string(max_steps) + " steps");
        Step st = next_step(f.top(), f.history);
        if (st.saturated)
            throw LJTranslationError("strategy saturated before (" + render(main) + ", " + goal + ") became available");
        if (st.rule.kind != RuleKind::ImplLeft) {
            f.extend(st.rule);
            continue;
        }
        Sequent s = f.top();
        BranchHistory h = f.history;
        f.extend(st.rule, 1);
        ProofTree* node = &f.tree;
        for (std::size_t i = 0; i + 1 < f.path.size(); ++i)
            node = &node->children[f.path[i]];
        ProofTree left = search_from(node->children[0].node, h.after(s, st.rule), sat_add(h.depth, search_cap));
        if (!is_closed(left))
            throw LJTranslationError("left premise of " + render(st.rule.formula) + " does not close");
        node->children[0] = std::move(left);
    }
    return f;
}

std::string row_name(RowKind k)
{
    switch (k) {
    case RowKind::Axiom: return "axiom";
    case RowKind::ImplRight: return "impl-right";
    case RowKind::ImplLeftUnfocused: return "impl-left unfocused";
    case RowKind::ImplLeftFocused: return "impl-left focused";
    case RowKind::ImplLeftExpanded: return "impl-left expanded";
    case RowKind::Structural: return "structural";
    }
    return "?";
}

namespace {

class Translator {
public:
    explicit Translator(std::uint64_t h, std::uint64_t cap) : h_(h), cap_(cap) {}

    ProofTree run(const LJProof& p, const Sequent& s, const BranchHistory& hist, const std::string& path)
    {
        if (!(s.goal == p.node.succedent))
            throw LJTranslationError("goal mismatch at '" + path + "'");
        switch (p.rule) {
        case LJRule::Axiom: {
            if (p.node.succedent.is_atom()) {
                rows.push_back({path, RowKind::Axiom, 1});
                return ProofTree{s, Rule::axiom(), {}};
            }
            // eta-expanded by the strategy
            ProofTree t = search_from(s, hist, sat_add(hist.depth, cap_));
            if (!is_closed(t))
                throw LJTranslationError("axiom at '" + path + "' does not close");
            rows.push_back({path, RowKind::Axiom, height(t)});
            return t;
        }
        case LJRule::Weakening:
        case LJRule::Contraction:
        case LJRule::Exchange:
            rows.push_back({path, RowKind::Structural, 0});
            return run(p.children[0], s, hist, path + "/0");
        case LJRule::Cut:
            throw LJTranslationError("cut at '" + path + "' has no translation");
        case LJRule::ImplRight: {
            rows.push_back({path, RowKind::ImplRight, 1});
            Rule r = Rule::impl_right();
            auto ps = apply_rule(s, r);
            return ProofTree{s, r, {run(p.children[0], ps[0], hist.after(s, r), path + "/0")}};
        }
        case LJRule::ImplLeft:
            return impl_left(p, s, hist, path);
        }
        throw LJTranslationError("unknown rule");
    }

    std::vector<TableRow> rows;

private:
    ProofTree impl_left(const LJProof& p, const Sequent& s, const BranchHistory& hist, const std::string& path)
    {
        auto main = lj_main_formula(p);
        if (!main)
            throw LJTranslationError("impl-left at '" + path + "' does not check");
        if (!s.goal.is_atom())
            throw LJTranslationError("impl-left at '" + path + "' has a non-atomic succedent");
        const std::string q = s.goal.name();
        bool was_focused = contains(s.focus, *main);

        Fragment f = focus_wrap(Fragment::start(s, hist), *main);
        std::size_t before = f.path.size();
        f = proof_until(std::move(f), *main, q, as_set(p.node.antecedent), h_, cap_);
        bool expanded = f.path.size() != before || !f.growing;
        f = focus_wrap(std::move(f), *main);
        if (!f.growing) {
            rows.push_back({path, RowKind::ImplLeftExpanded, f.path.size() + 1});
            return std::move(f.tree);
        }

        Rule r = Rule::impl_left(*main);
        const Sequent top = f.top();
        auto ps = apply_rule(top, r);
        BranchHistory next = f.history.after(top, r);
        ProofTree& g = f.growth();
        g.rule = r;
        RowKind kind = expanded ? RowKind::ImplLeftExpanded
                                : (was_focused ? RowKind::ImplLeftFocused : RowKind::ImplLeftUnfocused);
        rows.push_back({path, kind, f.path.size() + 1});
        g.children.push_back(run(p.children[0], ps[0], next, path + "/0"));
        g.children.push_back(run(p.children[1], ps[1], next, path + "/1"));
        return std::move(f.tree);
    }

    std::uint64_t h_;
    std::uint64_t cap_;
};

}  // namespace

LJTranslation translate_lj_to_lmt(const LJProof& p)
{
    if (auto v = check_lj_proof(p))
        throw LJTranslationError("input does not check at '" + v->path + "': " + v->reason);
    Sequent s = initial_sequent(p.node.succedent);
    s.delta = p.node.antecedent;
    Formula whole = s.goal;
    for (auto it = s.delta.rbegin(); it != s.delta.rend(); ++it)
        whole = Formula::implies(*it, whole);
    Translator t(expansion_bound(whole), lmt_height_bound(whole));
    LJTranslation out;
    out.proof = t.run(p, s, {}, "");
    out.table = std::move(t.rows);
    return out;
}

std::optional<TableRow> table_violation(const std::vector<TableRow>& rows, std::uint64_t h)
{
    for (const auto& r : rows) {
        bool ok = false;
        switch (r.kind) {
        case RowKind::Axiom:
        case RowKind::ImplRight:
        case RowKind::ImplLeftFocused: ok = r.lmt_nodes == 1; break;
        case RowKind::ImplLeftUnfocused: ok = r.lmt_nodes == 2; break;
        case RowKind::ImplLeftExpanded: ok = r.lmt_nodes >= 1 && r.lmt_nodes <= h; break;
        case RowKind::Structural: ok = r.lmt_nodes == 0; break;
        }
        if (!ok)
            return r;
    }
    return std::nullopt;
}

}  // namespace lmt
