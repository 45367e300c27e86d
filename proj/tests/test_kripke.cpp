#include "fixtures.hpp"
#include "lmt/kripke.hpp"

#include <gtest/gtest.h>

using namespace lmt;

TEST(Kripke, PeirceModelForcing)
{
    KripkeModel m = fx::model("model-15.json");
    EXPECT_FALSE(validate_model(m));
    EXPECT_TRUE(forces(m, "w_D", parse("A")));
    EXPECT_FALSE(forces(m, "w0", parse(fx::peirce)));
    EXPECT_FALSE(validates(m, parse(fx::peirce)));
    for (const auto& w : m.worlds) {
        EXPECT_TRUE(forces(m, w, parse("(A -> B) -> A")));
        EXPECT_FALSE(forces(m, w, parse("A -> B")));
        EXPECT_FALSE(forces(m, w, parse("B")));
    }
    EXPECT_FALSE(forces(m, "w0", parse("A")));
    EXPECT_FALSE(forces(m, "w_U1", parse("A")));
}

TEST(Kripke, SingleWorld)
{
    KripkeModel m{{"w"}, {}, {{"w", {"A"}}}, "w"};
    EXPECT_FALSE(validate_model(m));
    EXPECT_TRUE(forces(m, "w", parse("B -> A")));
    EXPECT_TRUE(validates(m, parse("A -> A")));
    EXPECT_THROW(forces(m, "v", parse("A")), UnknownWorld);
}

TEST(Kripke, MonotonicityViolation)
{
    KripkeModel m{{"lo", "hi"}, {{"lo", "hi"}}, {{"lo", {"A"}}, {"hi", {}}}, "lo"};
    auto v = validate_model(m);
    ASSERT_TRUE(v);
    EXPECT_NE(v->find("monotonicity"), std::string::npos);
    EXPECT_NE(v->find("lo"), std::string::npos);
    EXPECT_NE(v->find("hi"), std::string::npos);
}

TEST(Kripke, AntisymmetryViolation)
{
    KripkeModel m{{"a", "b"}, {{"a", "b"}, {"b", "a"}}, {}, "a"};
    auto v = validate_model(m);
    ASSERT_TRUE(v);
    EXPECT_NE(v->find("antisymmetry"), std::string::npos);
}

TEST(Kripke, Reachability)
{
    KripkeModel m{{"a", "b"}, {}, {}, "a"};
    auto v = validate_model(m);
    ASSERT_TRUE(v);
    EXPECT_NE(v->find("reachable"), std::string::npos);
    KripkeModel bad_root{{"a"}, {}, {}, "z"};
    EXPECT_TRUE(validate_model(bad_root));
}

TEST(Kripke, TautologyEverywhere)
{
    for (const char* name : {"model-15.json", "model-M1.json", "model-M2.json", "model-M3.json", "model-M4.json"})
        EXPECT_TRUE(validates(fx::model(name), parse("A -> A"))) << name;
}

TEST(Kripke, DummettModels)
{
    Formula a = fx::dummett();
    for (const char* name : {"model-M1.json", "model-M2.json", "model-M3.json", "model-M4.json"}) {
        KripkeModel m = fx::model(name);
        EXPECT_FALSE(validate_model(m)) << name;
        EXPECT_FALSE(validates(m, a)) << name;
        EXPECT_FALSE(forces(m, m.root, a)) << name;
    }
}

TEST(Kripke, SequentInvalidAtPeirceTop)
{
    KripkeModel m = fx::model("model-15.json");
    Sequent s28 = sequent_from_json(fx::golden("proof-14.json")["sequent_28"]);
    EXPECT_TRUE(sequent_invalid_at(m, "w0", s28));
}

TEST(Kripke, SequentWithForcedGoalIsNotInvalid)
{
    KripkeModel m = fx::model("model-15.json");
    Sequent s;
    s.delta = {parse("A"), parse("B -> A")};
    s.goal = parse("A");
    for (const auto& w : m.worlds)
        EXPECT_FALSE(sequent_invalid_at(m, w, s));
}
