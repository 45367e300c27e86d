#include "fixtures.hpp"
#include "lmt/lj2lmt.hpp"
#include "lmt/nd.hpp"

#include <gtest/gtest.h>

using namespace lmt;

namespace {

LJProof ax(Formulas g, const char* s) { return LJProof{{std::move(g), parse(s)}, LJRule::Axiom, {}}; }

// A, A->B, B->A => B using A->B twice on the same antecedent.
LJProof looping_proof()
{
    Formulas g{parse("A"), parse("A -> B"), parse("B -> A")};
    Formulas gb = g, ga = g;
    gb.push_back(parse("B"));
    ga.push_back(parse("A"));
    LJProof inner{{g, parse("B")}, LJRule::ImplLeft, {ax(g, "A"), ax(gb, "B")}};
    LJProof mid{{g, parse("A")}, LJRule::ImplLeft, {inner, ax(ga, "A")}};
    LJProof outer{{g, parse("B")}, LJRule::ImplLeft, {mid, ax(gb, "B")}};
    return outer;
}

LJProof close_right(LJProof body, const char* f)
{
    Formula whole = parse(f);
    std::vector<LJProof> chain{std::move(body)};
    Formulas g = chain.back().node.antecedent;
    while (!g.empty()) {
        Formula last = g.back();
        g.pop_back();
        Formula concl = chain.back().node.succedent;
        chain.push_back(LJProof{{g, Formula::implies(last, concl)}, LJRule::ImplRight, {chain.back()}});
    }
    EXPECT_EQ(chain.back().node.succedent, whole);
    return chain.back();
}

}  // namespace

TEST(LJ2LMT, ProofTenTranslates)
{
    LJProof ten = fx::lj("proof-10.json");
    LJTranslation t = translate_lj_to_lmt(ten);
    EXPECT_FALSE(check_lmt_proof(t.proof));
    EXPECT_FALSE(table_violation(t.table, expansion_bound(parse(fx::twice))));
    EXPECT_LE(height(t.proof), lmt_height_bound(parse(fx::twice)));
    EXPECT_EQ(to_json(t.proof), fx::golden("proof-13.json"));
}

TEST(LJ2LMT, ProofFiveTranslates)
{
    LJTranslation t = translate_lj_to_lmt(fx::lj("proof-5.json"));
    EXPECT_FALSE(check_lmt_proof(t.proof));
    EXPECT_FALSE(table_violation(t.table, expansion_bound(parse(fx::permute))));
    std::size_t lefts = 0;
    for (const auto& r : t.table)
        if (r.kind == RowKind::ImplLeftUnfocused || r.kind == RowKind::ImplLeftFocused)
            ++lefts;
    EXPECT_EQ(lefts, 2u);
}

TEST(LJ2LMT, AxiomClause)
{
    LJProof p = ax({parse("B"), parse("A")}, "A");
    LJTranslation t = translate_lj_to_lmt(p);
    EXPECT_EQ(t.proof.rule.kind, RuleKind::Axiom);
    EXPECT_FALSE(check_lmt_proof(t.proof));
    ASSERT_EQ(t.table.size(), 1u);
    EXPECT_EQ(t.table[0].lmt_nodes, 1u);
}

TEST(LJ2LMT, NonAtomicAxiomIsExpanded)
{
    LJProof p = ax({parse("A -> B")}, "A -> B");
    LJTranslation t = translate_lj_to_lmt(p);
    EXPECT_FALSE(check_lmt_proof(t.proof));
    EXPECT_EQ(t.proof.rule.kind, RuleKind::ImplRight);
    EXPECT_GT(t.table[0].lmt_nodes, 1u);
}

TEST(LJ2LMT, CutRejected)
{
    Formula a = parse("A");
    LJProof cut{{{a}, a}, LJRule::Cut, {ax({a}, "A"), ax({a}, "A")}};
    ASSERT_FALSE(check_lj_proof(cut));
    EXPECT_THROW(translate_lj_to_lmt(cut), LJTranslationError);
}

TEST(LJ2LMT, FocusWrap)
{
    Formula x = parse("A -> B");
    Sequent s;
    s.delta = {x};
    s.goal = parse("B");
    Fragment f = focus_wrap(Fragment::start(s, {}), x);
    EXPECT_EQ(f.path.size(), 1u);
    EXPECT_EQ(f.tree.rule.kind, RuleKind::Focus);
    EXPECT_TRUE(contains(f.top().focus, x));
    Fragment g = focus_wrap(f, x);
    EXPECT_EQ(g.path.size(), 1u);
    EXPECT_EQ(to_json(g.tree), to_json(f.tree));
    EXPECT_THROW(focus_wrap(Fragment::start(s, {}), parse("C")), LJTranslationError);
}

TEST(LJ2LMT, ProofUntilUntriedIsUnchanged)
{
    Formula x = parse("A -> B");
    Sequent s;
    s.focus = {x};
    s.delta = {x};
    s.goal = parse("B");
    Fragment f = proof_until(Fragment::start(s, {}), x, "B", {x}, 100, 1000);
    EXPECT_TRUE(f.path.empty());
}

TEST(LJ2LMT, ProofUntilWithoutLabelsFails)
{
    Formula x = parse("A -> B");
    Sequent s;
    s.focus = {x};
    s.delta = {x};
    s.goal = parse("B");
    BranchHistory h;
    h.tried_contexts.insert(context_of(s, x));
    EXPECT_THROW(proof_until(Fragment::start(s, h), x, "B", {x}, 100, 1000), LJTranslationError);
}

TEST(LJ2LMT, RepeatedContextRestarts)
{
    const char* f = "A -> (A -> B) -> (B -> A) -> B";
    LJProof p = close_right(looping_proof(), f);
    ASSERT_FALSE(check_lj_proof(p));
    LJTranslation t = translate_lj_to_lmt(p);
    EXPECT_FALSE(check_lmt_proof(t.proof));
    bool expanded = false;
    for (const auto& r : t.table)
        if (r.kind == RowKind::ImplLeftExpanded) {
            expanded = true;
            EXPECT_LE(r.lmt_nodes, expansion_bound(parse(f)));
        }
    EXPECT_TRUE(expanded);
    EXPECT_FALSE(table_violation(t.table, expansion_bound(parse(f))));
}

TEST(LJ2LMT, OracleProofsTranslate)
{
    for (const auto& f : enumerate_upto(7, default_atoms(2))) {
        auto p = lj_prove(f);
        if (!p)
            continue;
        LJTranslation t = translate_lj_to_lmt(*p);
        EXPECT_FALSE(check_lmt_proof(t.proof)) << render(f);
        EXPECT_LE(height(t.proof), lmt_height_bound(f)) << render(f);
        EXPECT_FALSE(table_violation(t.table, expansion_bound(f))) << render(f);
    }
}

TEST(LJ2LMT, NdCompositionChecks)
{
    LJProof lj = translate_nd_to_lj(fx::nd("proof-9.json"));
    LJTranslation t = translate_lj_to_lmt(lj);
    EXPECT_FALSE(check_lmt_proof(t.proof));
}
