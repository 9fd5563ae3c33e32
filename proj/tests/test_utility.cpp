#include <gtest/gtest.h>

#include <random>

#include "awarekit/model_io.hpp"
#include "awarekit/oracle.hpp"
#include "awarekit/utility.hpp"

using namespace awarekit;

namespace {

std::string fixture(const std::string& name) { return std::string(AWAREKIT_FIXTURES) + "/" + name; }

using Set = std::set<std::string>;

// Full languages everywhere; awareness of state 0 copied to every state and,
// optionally, concept definitions of state 0 copied too.
Model uniform_model(std::uint64_t seed, bool constant_defs) {
  ModelDims d;
  d.states = 2 + seed % 3;
  d.predicates = 1 + seed % 3;
  d.objects = 2 + seed % 2;
  d.concepts = 1 + seed % 2;
  d.drop_language = 0;
  Model m = random_model(seed, d);
  for (int i = 0; i < 2; ++i) {
    for (StateId w = 0; w < m.num_states(); ++w) m.awareness[i][w] = m.awareness[i][0];
  }
  if (constant_defs) {
    for (StateId w = 0; w < m.num_states(); ++w) m.concept_defs[w] = m.concept_defs[0];
  }
  m.finalize();
  return m;
}

void random_values(Model& m, std::mt19937_64& rng, int levels) {
  std::uniform_int_distribution<int> v(0, levels - 1);
  for (auto& per_agent : m.economy->utilities) {
    for (auto& per_state : per_agent) {
      for (auto& u : per_state) u = Rational(v(rng));
    }
  }
}

}  // namespace

TEST(Profiles, Example1) {
  Model m = load_model(fixture("ex1.json"));
  EXPECT_EQ(prop_profile(m, 0, "d_cmp"), (Set{"P", "Q"}));
  EXPECT_EQ(con_profile(m, 0, "d_cmp"), (Set{"QC"}));
  EXPECT_EQ(prop_profile(m, 2, "d_cmp"), Set{});
  EXPECT_EQ(con_profile(m, 2, "d_cmp"), (Set{"QC"}));
  for (StateId w = 0; w < 3; ++w) {
    EXPECT_EQ(prop_profile(m, w, "d_$"), (Set{"R"}));
    EXPECT_EQ(con_profile(m, w, "d_$"), Set{});
  }
}

TEST(Profiles, Example2Aware) {
  Model m = load_model(fixture("ex2.json"));
  EXPECT_EQ(aware_profile(m, 1, 0, "d_cmp"), (Profile{{"P"}, {"QC"}}));
  EXPECT_EQ(aware_profile(m, 1, 1, "d_cmp"), (Profile{{"P"}, {}}));
  EXPECT_EQ(aware_profile(m, 1, 2, "d_cmp"), (Profile{{}, {"QC"}}));
}

TEST(Assumptions, Example2) {
  Model m = load_model(fixture("ex2.json"));
  EXPECT_FALSE(check_assumption(m, Assumption::kA1).has_value());
  EXPECT_FALSE(check_assumption(m, Assumption::kA2).has_value());
  auto w = check_assumption(m, Assumption::kA3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->agent, 1);
  EXPECT_EQ(w->w1, 0u);
  EXPECT_EQ(w->d1, "d_cmp");
  EXPECT_EQ(w->w2, 1u);
  EXPECT_EQ(w->d2, "d_cmp");
  EXPECT_EQ(w->u1, Rational(2));
  EXPECT_EQ(w->u2, Rational(0));
}

TEST(Assumptions, Example1) {
  Model m = load_model(fixture("ex1.json"));
  for (auto a : {Assumption::kA1, Assumption::kA2, Assumption::kA3, Assumption::kA1Strong}) {
    EXPECT_FALSE(check_assumption(m, a).has_value()) << assumption_name(a);
  }
}

TEST(Assumptions, ByConstruction) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ModelDims d;
    d.states = 2 + seed % 4;
    d.predicates = 1 + seed % 3;
    d.objects = 2 + seed % 3;
    d.concepts = seed % 3;
    Model m = random_model(seed, d);
    random_utilities(m, seed, Assumption::kA3);
    ASSERT_FALSE(check_assumption(m, Assumption::kA3).has_value()) << seed;
    ASSERT_FALSE(check_assumption(m, Assumption::kA2).has_value()) << seed;
    random_utilities(m, seed, Assumption::kA2);
    ASSERT_FALSE(check_assumption(m, Assumption::kA2).has_value()) << seed;
    random_utilities(m, seed, Assumption::kA1);
    ASSERT_FALSE(check_assumption(m, Assumption::kA1).has_value()) << seed;
  }
}

TEST(Assumptions, A3ImpliesA2) {
  std::size_t a3_ok = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    ModelDims d;
    d.states = 2 + seed % 3;
    d.predicates = 1 + seed % 3;
    d.objects = 2;
    Model m = random_model(seed, d);
    std::mt19937_64 rng(seed);
    random_values(m, rng, 2);
    if (check_assumption(m, Assumption::kA3)) continue;
    ++a3_ok;
    ASSERT_FALSE(check_assumption(m, Assumption::kA2).has_value()) << seed;
  }
  EXPECT_GT(a3_ok, 0u);
}

TEST(Assumptions, A3ImpliesA1UnderUniformAwareness) {
  std::size_t a3_ok = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Model m = uniform_model(seed, false);
    std::mt19937_64 rng(seed);
    random_values(m, rng, 2);
    if (check_assumption(m, Assumption::kA3)) continue;
    ++a3_ok;
    ASSERT_FALSE(check_assumption(m, Assumption::kA1).has_value()) << seed;
  }
  EXPECT_GT(a3_ok, 0u);
}

TEST(Assumptions, A3DoesNotImplyA1WhenAwarenessVaries) {
  // d at w1 and w2 has property P; the agent is aware of P only at w1, so A3
  // is silent while A1 demands equal utility.
  Model m = load_model(fixture("ex4.json"));
  m.partitions[0] = {{0}, {1, 2}};
  m.partitions[1] = {{0}, {1, 2}};
  m.awareness[0][0].predicates = {"P", "R"};
  m.awareness[1][0].predicates = {"P", "R"};
  for (StateId w = 1; w < 3; ++w) {
    m.awareness[0][w].predicates = {"R"};
    m.awareness[1][w].predicates = {"R"};
  }
  m.extensions[1]["P"] = {"d1"};
  m.finalize();
  for (StateId w = 0; w < 3; ++w) {
    m.economy->utilities[0][w] = {Rational(w == 0 ? 2 : 0), Rational(1)};
    m.economy->utilities[1][w] = {Rational(1), Rational(0)};
  }
  EXPECT_FALSE(check_assumption(m, Assumption::kA3).has_value());
  EXPECT_TRUE(check_assumption(m, Assumption::kA1).has_value());
}

TEST(Assumptions, CollapseUnderFullAwareness) {
  // Example 1 has full awareness: every utility table on a 0/1 grid for
  // agent 1 gets the same verdict from all three checks.
  Model m = load_model(fixture("ex1.json"));
  for (unsigned bits = 0; bits < 64; ++bits) {
    for (StateId w = 0; w < 3; ++w) {
      m.economy->utilities[0][w][0] = Rational(bits >> (2 * w) & 1U);
      m.economy->utilities[0][w][1] = Rational(bits >> (2 * w + 1) & 1U);
    }
    bool a1 = !check_assumption(m, Assumption::kA1);
    bool a2 = !check_assumption(m, Assumption::kA2);
    bool a3 = !check_assumption(m, Assumption::kA3);
    ASSERT_EQ(a1, a2) << bits;
    ASSERT_EQ(a2, a3) << bits;
  }
}

TEST(Assumptions, CollapseOnRandomFullAwarenessModels) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Model m = uniform_model(seed, true);
    for (int i = 0; i < 2; ++i) {
      for (StateId w = 0; w < m.num_states(); ++w) m.awareness[i][w] = m.language[w];
    }
    m.finalize();
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 10; ++k) {
      random_values(m, rng, 2);
      bool a1 = !check_assumption(m, Assumption::kA1);
      ASSERT_EQ(a1, !check_assumption(m, Assumption::kA2)) << seed;
      ASSERT_EQ(a1, !check_assumption(m, Assumption::kA3)) << seed;
    }
  }
}

TEST(Assumptions, A1MatchesStrengthenedFormWithFixedConcepts) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Model m = uniform_model(seed, true);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 10; ++k) {
      random_values(m, rng, 2);
      ASSERT_EQ(!check_assumption(m, Assumption::kA1), !check_assumption(m, Assumption::kA1Strong)) << seed;
    }
  }
}

TEST(Assumptions, StrengthenedFormDiffersWhenDefinitionsVary) {
  // d_cmp has no properties at w3 (an instance of QC there); give d_$ no
  // properties at w1, where QC = P & Q, so equal props come with unequal concepts.
  Model m = load_model(fixture("ex1.json"));
  m.extensions[0]["R"] = {};
  m.finalize();
  for (StateId w = 0; w < 3; ++w) {
    m.economy->utilities[0][w] = {Rational(0), Rational(0)};
    m.economy->utilities[1][w] = {Rational(0), Rational(0)};
  }
  m.economy->utilities[0][2][m.sig.object_index("d_cmp")] = Rational(5);
  EXPECT_TRUE(check_assumption(m, Assumption::kA1).has_value());
  EXPECT_FALSE(check_assumption(m, Assumption::kA1Strong).has_value());
}
