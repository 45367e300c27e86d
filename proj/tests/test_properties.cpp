#include "fixtures.hpp"
#include "lmt/countermodel.hpp"
#include "lmt/lj.hpp"
#include "lmt/nd.hpp"

#include <gtest/gtest.h>

using namespace lmt;

namespace {

// Reference evaluator: recomputes reachability by search at every step.
bool reach(const KripkeModel& m, const std::string& a, const std::string& b)
{
    std::vector<std::string> todo{a};
    std::set<std::string> seen{a};
    while (!todo.empty()) {
        std::string w = todo.back();
        todo.pop_back();
        if (w == b)
            return true;
        for (const auto& [x, y] : m.edges)
            if (x == w && seen.insert(y).second)
                todo.push_back(y);
    }
    return false;
}

bool naive(const KripkeModel& m, const std::string& w, const Formula& f)
{
    if (f.is_atom()) {
        auto it = m.valuation.find(w);
        return it != m.valuation.end() && it->second.contains(f.name());
    }
    for (const auto& v : m.worlds)
        if (reach(m, w, v) && naive(m, v, f.lhs()) && !naive(m, v, f.rhs()))
            return false;
    return true;
}

std::vector<KripkeModel> emitted_models()
{
    std::vector<KripkeModel> out;
    for (const auto& f : enumerate_upto(7, default_atoms(2))) {
        auto s = search(f);
        if (!s.proved)
            out.push_back(assemble_countermodel(s.tree));
    }
    out.push_back(assemble_countermodel(search(fx::dummett()).tree));
    return out;
}

void walk(const ProofTree& t, const std::function<void(const ProofTree&)>& fn)
{
    fn(t);
    for (const auto& c : t.children)
        walk(c, fn);
}

}  // namespace

TEST(Property, RenderParseRoundTrip)
{
    for (const auto& f : enumerate_upto(9, default_atoms(2)))
        ASSERT_EQ(parse(render(f)), f) << render(f);
}

TEST(Property, DegreeLaws)
{
    for (const auto& f : enumerate_upto(9, default_atoms(2))) {
        if (f.is_atom())
            ASSERT_EQ(degree(f), 1);
        else
            ASSERT_EQ(degree(f), degree(f.lhs()) + degree(f.rhs()) + 1);
        ASSERT_LE(subformulas(f).size(), static_cast<std::size_t>(degree(f)));
    }
}

TEST(Property, ForcingMonotoneAndMatchesReference)
{
    auto models = emitted_models();
    auto formulas = enumerate_upto(5, default_atoms(3));
    for (const auto& m : models) {
        ASSERT_FALSE(validate_model(m));
        Forcing fr(m);
        for (const auto& f : formulas)
            for (const auto& w : m.worlds) {
                bool here = fr.forces(w, f);
                ASSERT_EQ(here, naive(m, w, f)) << render(f) << " at " << w;
                if (here)
                    for (const auto& v : fr.above(w))
                        ASSERT_TRUE(fr.forces(v, f));
            }
    }
}

TEST(Property, TheoremsHoldOnEmittedModels)
{
    auto models = emitted_models();
    for (const auto& f : enumerate_upto(7, default_atoms(2))) {
        if (!search(f).proved)
            continue;
        for (const auto& m : models)
            ASSERT_TRUE(validates(m, f)) << render(f);
    }
}

TEST(Property, SearchInvariantsAndNoContextReuse)
{
    for (const auto& f : enumerate_upto(7, default_atoms(2))) {
        auto s = search(f);
        walk(s.tree, [&](const ProofTree& n) { ASSERT_FALSE(sequent_invariant_violation(n.node)) << render(f); });
        ASSERT_FALSE(check_lmt_proof(s.tree, {true})) << render(f);
        std::vector<const ProofTree*> leaves;
        collect_open_leaves(s.tree, leaves);
        for (const auto* l : leaves) {
            KripkeModel m = extract_branch_model(l->node);
            ASSERT_LE(m.worlds.size(), l->node.labels.size() + 2);
            ASSERT_TRUE(sequent_invalid_at(m, m.root, l->node)) << render(f);
        }
    }
}

TEST(Property, OracleAgreesOnSmallFormulas)
{
    for (const auto& f : enumerate_upto(7, default_atoms(2)))
        ASSERT_EQ(search(f).proved, lj_decide(f) == Verdict::Theorem) << render(f);
    for (const auto& f : enumerate_exact(3, default_atoms(1)))
        EXPECT_EQ(lj_decide(f) == Verdict::Theorem, f == parse("A -> A")) << render(f);
}

TEST(Property, OracleProofsCheck)
{
    for (const auto& f : enumerate_upto(7, default_atoms(2)))
        if (auto p = lj_prove(f))
            ASSERT_FALSE(check_lj_proof(*p)) << render(f);
}

TEST(Property, BoundOrdering)
{
    for (int d = 3; d <= 15; d += 2) {
        Formula f = enumerate_exact(d, default_atoms(1)).front();
        EXPECT_GT(lmt_height_bound(f), nd_height_bound(f));
    }
}
