#include "fixtures.hpp"
#include "lmt/countermodel.hpp"

#include <gtest/gtest.h>

using namespace lmt;

namespace {

std::vector<std::string> successors(const KripkeModel& m, const std::string& w)
{
    std::vector<std::string> out;
    for (const auto& [a, b] : m.edges)
        if (a == w)
            out.push_back(b);
    return out;
}

bool is_chain(const KripkeModel& m)
{
    Forcing fr(m);
    for (const auto& a : m.worlds)
        for (const auto& b : m.worlds)
            if (!fr.leq(a, b) && !fr.leq(b, a))
                return false;
    return true;
}

}  // namespace

TEST(Countermodel, PeirceTopSequent)
{
    Sequent s28 = sequent_from_json(fx::golden("proof-14.json")["sequent_28"]);
    KripkeModel m = extract_branch_model(s28);
    EXPECT_EQ(to_json(m), fx::golden("model-15.json"));
    EXPECT_TRUE(sequent_invalid_at(m, m.root, s28));
    for (const auto& w : m.worlds) {
        EXPECT_TRUE(forces(m, w, parse("(A -> B) -> A")));
        EXPECT_FALSE(forces(m, w, parse("A -> B")));
    }
}

TEST(Countermodel, RightmostBranchHasTwoWorlds)
{
    Sequent s;
    s.delta = {parse("A")};
    s.goal = parse("B");
    KripkeModel m = extract_branch_model(s);
    EXPECT_EQ(m.worlds, (std::vector<std::string>{"w0", "w_D"}));
    EXPECT_TRUE(forces(m, "w_D", parse("A")));
    EXPECT_FALSE(forces(m, "w_D", parse("B")));
    EXPECT_TRUE(sequent_invalid_at(m, "w0", s));
}

TEST(Countermodel, EqualBagsCollapse)
{
    Sequent s;
    Formula x = parse("(A -> B) -> A");
    s.bags = {{"A", {x}}, {"C", {x}}};
    s.labels = {"A", "C"};
    s.delta = {x, parse("A")};
    s.goal = parse("B");
    KripkeModel m = extract_branch_model(s);
    EXPECT_EQ(m.worlds.size(), 3u);
    EXPECT_LE(m.worlds.size(), s.labels.size() + 2);
    EXPECT_TRUE(sequent_invalid_at(m, m.root, s));
}

TEST(Countermodel, MergeSingleIsIdentity)
{
    KripkeModel m = fx::model("model-15.json");
    KripkeModel r = merge_models({m});
    EXPECT_EQ(r.worlds.size(), m.worlds.size());
    EXPECT_EQ(r.edges.size(), m.edges.size());
    for (const char* f : {fx::peirce, "A -> B", "(A -> B) -> A", "B"})
        EXPECT_EQ(forces(r, r.root, parse(f)), forces(m, m.root, parse(f))) << f;
}

TEST(Countermodel, MergeTwoChains)
{
    KripkeModel ab{{"r", "x"}, {{"r", "x"}}, {{"x", {"A"}}}, "r"};
    KripkeModel ba{{"r", "x"}, {{"r", "x"}}, {{"x", {"B"}}}, "r"};
    ASSERT_FALSE(forces(ab, "r", parse("A -> B")));
    ASSERT_FALSE(forces(ba, "r", parse("B -> A")));
    KripkeModel m = merge_models({ab, ba});
    EXPECT_EQ(m.worlds.size(), 3u);
    EXPECT_FALSE(validate_model(m));
    EXPECT_FALSE(forces(m, m.root, parse("A -> B")));
    EXPECT_FALSE(forces(m, m.root, parse("B -> A")));
}

TEST(Countermodel, MergeDummettModels)
{
    KripkeModel m = merge_models({fx::model("model-M1.json"), fx::model("model-M2.json"), fx::model("model-M3.json")});
    EXPECT_FALSE(validate_model(m));
    EXPECT_TRUE(m.valuation[m.root].empty());
    EXPECT_GE(successors(m, m.root).size(), 2u);
    EXPECT_FALSE(forces(m, m.root, fx::dummett()));
}

TEST(Countermodel, AssemblePeirce)
{
    auto out = search(parse(fx::peirce));
    ASSERT_FALSE(out.proved);
    KripkeModel m = assemble_countermodel(out.tree);
    EXPECT_FALSE(validate_model(m));
    EXPECT_EQ(m.worlds.size(), 3u);
    EXPECT_TRUE(is_chain(m));
    EXPECT_FALSE(forces(m, m.root, parse(fx::peirce)));
    int top = 0;
    for (const auto& w : m.worlds)
        if (successors(m, w).empty()) {
            ++top;
            EXPECT_TRUE(forces(m, w, parse("A")));
            EXPECT_FALSE(forces(m, w, parse("B")));
        }
    EXPECT_EQ(top, 1);
}

TEST(Countermodel, AssembleDummett)
{
    auto out = search(fx::dummett());
    ASSERT_FALSE(out.proved);
    KripkeModel m = assemble_countermodel(out.tree);
    EXPECT_FALSE(validate_model(m));
    EXPECT_FALSE(forces(m, m.root, fx::dummett()));
    auto succ = successors(m, m.root);
    Forcing fr(m);
    bool incomparable = false;
    for (const auto& a : succ)
        for (const auto& b : succ)
            if (!fr.leq(a, b) && !fr.leq(b, a))
                incomparable = true;
    EXPECT_TRUE(incomparable);
}

TEST(Countermodel, AssembleAtom)
{
    auto out = search(parse("A"));
    ASSERT_FALSE(out.proved);
    KripkeModel m = assemble_countermodel(out.tree);
    EXPECT_TRUE(is_chain(m));
    EXPECT_FALSE(forces(m, m.root, parse("A")));
}

TEST(Countermodel, ProvedTreeHasNoModel)
{
    auto out = search(parse("A -> A"));
    EXPECT_THROW(assemble_countermodel(out.tree), CountermodelError);
}
