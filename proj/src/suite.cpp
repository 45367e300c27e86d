#include "lmt/suite.hpp"

#include "lmt/countermodel.hpp"
#include "lmt/lj.hpp"
#include "lmt/render.hpp"

namespace lmt {

CrossCheck cross_check(const Formula& f)
{
    CrossCheck r;
    auto out = search(f);
    r.theorem = out.proved;
    r.oracle_theorem = lj_decide(f) == Verdict::Theorem;
    r.height = height(out.tree);
    r.nodes = size(out.tree);
    std::vector<const ProofTree*> leaves;
    collect_open_leaves(out.tree, leaves);
    r.open_leaves = leaves.size();
    for (const auto* l : leaves)
        if (l->rule.reason == OpenReason::Cap)
            r.cap_hit = true;

    auto fail = [&](std::string why) {
        if (!r.problem)
            r.problem = render(f) + ": " + why;
    };
    if (r.theorem != r.oracle_theorem)
        fail(std::string("search says ") + (r.theorem ? "theorem" : "non-theorem") + ", oracle disagrees");
    if (r.cap_hit)
        fail("depth cap reached");
    if (r.theorem) {
        if (auto v = check_lmt_proof(out.tree))
            fail("proof rejected at '" + v->path + "': " + v->reason);
        if (r.height > lmt_height_bound(f))
            fail("proof height exceeds the bound");
        r.artifact = to_json(out.tree);
        return r;
    }
    try {
        KripkeModel m = assemble_countermodel(out.tree);
        if (auto v = validate_model(m))
            fail("model invalid: " + *v);
        if (validates(m, f))
            fail("model validates the formula");
        r.artifact = to_json(m);
    } catch (const std::exception& e) {
        fail(std::string("no counter-model: ") + e.what());
    }
    for (const auto* l : leaves) {
        KripkeModel lm = extract_branch_model(l->node);
        if (!sequent_invalid_at(lm, lm.root, l->node)) {
            fail("open leaf " + sequent_text(l->node) + " not refuted by its model");
            break;
        }
    }
    return r;
}

std::vector<Formula> pseudo_sample(std::size_t n, int max_degree, const std::vector<std::string>& atoms)
{
    std::vector<std::pair<int, std::uint64_t>> blocks;
    std::uint64_t total = 0;
    for (int d = 1; d <= max_degree; d += 2) {
        blocks.emplace_back(d, count_exact(d, atoms.size()));
        total += blocks.back().second;
    }
    std::vector<Formula> out;
    for (std::size_t i = 0; i < n && total > 0; ++i) {
        auto rank = static_cast<std::uint64_t>(static_cast<unsigned __int128>(i) * total / n);
        for (const auto& [d, c] : blocks) {
            if (rank < c) {
                out.push_back(unrank(d, rank, atoms));
                break;
            }
            rank -= c;
        }
    }
    return out;
}

}  // namespace lmt
