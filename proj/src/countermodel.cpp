#include "lmt/countermodel.hpp"

#include <algorithm>
#include <optional>

namespace lmt {

namespace {

std::set<std::string> atoms_of(const Formulas& set)
{
    std::set<std::string> out;
    for (const auto& f : set)
        if (f.is_atom())
            out.insert(f.name());
    return out;
}

}  // namespace

KripkeModel extract_branch_model(const Sequent& top)
{
    std::vector<std::pair<std::string, Formulas>> comps;
    comps.emplace_back("w_D", as_set(top.delta));
    for (std::size_t i = 0; i < top.bags.size(); ++i) {
        Formulas s = as_set(top.bags[i].content);
        if (s.empty())
            continue;
        bool seen = std::any_of(comps.begin(), comps.end(), [&](const auto& c) { return c.second == s; });
        if (!seen)
            comps.emplace_back("w_U" + std::to_string(i + 1), s);
    }

    KripkeModel m;
    m.root = "w0";
    m.worlds.push_back("w0");
    m.valuation["w0"] = {};
    auto strict = [](const Formulas& a, const Formulas& b) { return a.size() < b.size() && subset_of(a, b); };
    for (const auto& [name, set] : comps) {
        m.worlds.push_back(name);
        m.valuation[name] = atoms_of(set);
        bool minimal = true;
        for (const auto& [other, oset] : comps) {
            if (!strict(oset, set))
                continue;
            minimal = false;
            bool covers = std::none_of(comps.begin(), comps.end(),
                                       [&](const auto& mid) { return strict(oset, mid.second) && strict(mid.second, set); });
            if (covers)
                m.edges.emplace_back(other, name);
        }
        if (minimal)
            m.edges.emplace_back("w0", name);
    }
    m.normalize();
    return m;
}

KripkeModel merge_models(const std::vector<KripkeModel>& models)
{
    if (models.empty())
        throw CountermodelError("merge of no models");
    KripkeModel out;
    out.root = "w0";
    out.worlds.push_back("w0");
    out.valuation["w0"] = {};
    for (std::size_t i = 0; i < models.size(); ++i) {
        const auto& m = models[i];
        std::string prefix = "m" + std::to_string(i + 1) + "_";
        auto rename = [&](const std::string& w) { return w == m.root ? std::string("w0") : prefix + w; };
        if (auto it = m.valuation.find(m.root); it != m.valuation.end())
            out.valuation["w0"].insert(it->second.begin(), it->second.end());
        for (const auto& w : m.worlds) {
            if (w == m.root)
                continue;
            out.worlds.push_back(rename(w));
            auto it = m.valuation.find(w);
            out.valuation[rename(w)] = it == m.valuation.end() ? std::set<std::string>{} : it->second;
        }
        for (const auto& [a, b] : m.edges)
            out.edges.emplace_back(rename(a), rename(b));
    }
    out.normalize();
    if (auto v = validate_model(out))
        throw CountermodelError("merged model is invalid: " + *v);
    return out;
}

namespace {

std::optional<KripkeModel> fold(const ProofTree& t)
{
    if (t.rule.kind == RuleKind::OpenLeaf)
        return extract_branch_model(t.node);
    std::vector<KripkeModel> open;
    for (const auto& c : t.children)
        if (auto m = fold(c))
            open.push_back(std::move(*m));
    if (open.empty())
        return std::nullopt;
    if (open.size() == 1)
        return open.front();
    return merge_models(open);
}

}  // namespace

KripkeModel assemble_countermodel(const ProofTree& t)
{
    auto m = fold(t);
    if (!m)
        throw CountermodelError("tree has no open leaf");
    if (auto v = validate_model(*m))
        throw CountermodelError("assembled model is invalid: " + *v);
    if (forces(*m, m->root, t.node.goal))
        throw CountermodelError("assembled model forces " + render(t.node.goal) + " at its root");
    return *m;
}

}  // namespace lmt
