#include <gtest/gtest.h>

#include "mh/exact_oracle.hpp"
#include "mh/generator.hpp"
#include "mh/moore_hodgson.hpp"
#include "test_support.hpp"

using namespace mh;
using mh::testing::moore_instance;
using mh::testing::moore_weighted_instance;
using mh::testing::permutation_optimum;

namespace {

Instance small_instance(std::uint64_t seed, std::size_t max_n, bool weighted = false) {
  SplitMix64 rng(seed);
  return generate({.seed = rng.next(),
                   .n = rng.uniform(0, max_n),
                   .p_max = 12,
                   .d_mode = seed % 2 ? DueDateMode::tight : DueDateMode::uniform,
                   .weighted_opposite = weighted});
}

Weight objective_of(const Instance& inst, const std::vector<JobId>& on_time, bool weighted) {
  Weight total = weighted ? inst.total_weight() : inst.size();
  for (JobId id : on_time) total -= weighted ? inst.job(id).w : 1;
  return total;
}

}  // namespace

TEST(FeasibleOnTime, Examples) {
  const Instance moore = moore_instance();
  const std::vector<JobId> good{8, 7, 5, 4, 2, 1};
  const std::vector<JobId> bad{1, 2, 3};
  EXPECT_TRUE(feasible_on_time(moore, good));
  EXPECT_FALSE(feasible_on_time(moore, bad));
  EXPECT_TRUE(feasible_on_time(moore, std::vector<JobId>{}));
  EXPECT_THROW(feasible_on_time(moore, std::vector<JobId>{42}), InvalidInput);
}

TEST(BruteForce, Examples) {
  const OracleResult r = brute_force(moore_instance(), false);
  EXPECT_EQ(r.min_objective, 2u);
  EXPECT_TRUE(feasible_on_time(moore_instance(), r.witness_on_time));

  const OracleResult single = brute_force(Instance({{1, 5, 4, 1}}), false);
  EXPECT_EQ(single.min_objective, 1u);
  EXPECT_TRUE(single.witness_on_time.empty());

  // Pinned from exhaustive permutation enumeration of the weighted instance.
  EXPECT_EQ(brute_force(moore_weighted_instance(), true).min_objective, 8u);

  EXPECT_EQ(brute_force(adversarial_family("all_ties", 6), false).min_objective, 4u);
}

TEST(BruteForce, CapIsEnforced) {
  const Instance big = generate({.seed = 1, .n = 21});
  EXPECT_THROW(brute_force(big, false), CapExceeded);
  EXPECT_NO_THROW(brute_force(generate({.seed = 1, .n = 6}), {.cap = 6}));
  EXPECT_THROW(brute_force(generate({.seed = 1, .n = 7}), {.cap = 6}), CapExceeded);
}

// Subset enumeration with EDD feasibility agrees with trying every order.
TEST(BruteForce, AgreesWithPermutationEnumeration) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const bool weighted = seed % 3 == 0;
    const Instance inst = small_instance(seed, 7, weighted);
    ASSERT_EQ(brute_force(inst, weighted).min_objective, permutation_optimum(inst, weighted))
        << "seed " << seed;
  }
}

TEST(BruteForce, WitnessesAndOptimalSets) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst = small_instance(seed, 9);
    const OracleResult r = brute_force(inst, {.collect_all_optimal = true});
    ASSERT_TRUE(feasible_on_time(inst, r.witness_on_time));
    ASSERT_EQ(objective_of(inst, r.witness_on_time, false), r.min_objective);
    ASSERT_TRUE(r.all_optimal_on_time_sets.has_value());
    ASSERT_FALSE(r.all_optimal_on_time_sets->empty());
    for (const auto& set : *r.all_optimal_on_time_sets) {
      ASSERT_TRUE(feasible_on_time(inst, set));
      ASSERT_EQ(objective_of(inst, set, false), r.min_objective);
      // No job can be added to an optimal set.
      for (const Job& j : inst.jobs()) {
        if (std::find(set.begin(), set.end(), j.id) != set.end()) continue;
        std::vector<JobId> bigger = set;
        bigger.push_back(j.id);
        ASSERT_FALSE(feasible_on_time(inst, bigger));
      }
    }
  }
}

TEST(BruteForce, DeletionMovesOptimumByAtMostOne) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = small_instance(seed, 9);
    const Weight opt = brute_force(inst, false).min_objective;
    for (const Job& j : inst.jobs()) {
      const Weight reduced = brute_force(inst.without(j.id), false).min_objective;
      ASSERT_LE(reduced, opt);
      ASSERT_LE(opt, reduced + 1);
    }
  }
}

TEST(OracleSolverAgreement, UnweightedAndWeighted) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Instance inst = small_instance(seed, 10);
    ASSERT_EQ(solve(inst).first.num_late, brute_force(inst, false).min_objective);
    const Instance winst = small_instance(seed, 10, true);
    ASSERT_EQ(solve_weighted_opposite(winst).first.weighted_late,
              brute_force(winst, true).min_objective);
  }
}

TEST(FirstRejection, Moore) {
  EXPECT_EQ(first_rejection(moore_instance()), 3u);
  EXPECT_EQ(first_rejection(adversarial_family("staircase", 5)), std::nullopt);
}

TEST(Prop1, Examples) {
  EXPECT_TRUE(check_prop1(moore_instance()));
  EXPECT_TRUE(check_prop1(adversarial_family("none_late", 6)));
  EXPECT_TRUE(check_prop1(Instance{}));
}

TEST(Lemma1, Examples) {
  EXPECT_TRUE(check_lemma1(moore_instance()));
  EXPECT_TRUE(check_lemma1(Instance({{1, 2, 1, 1}, {2, 2, 1, 1}})));
  EXPECT_THROW(check_lemma1(adversarial_family("staircase", 4)), PreconditionViolation);
}

TEST(InductionStep, Examples) {
  EXPECT_EQ(brute_force(moore_instance().without(3), false).min_objective, 1u);
  EXPECT_TRUE(check_induction_step(moore_instance()));
  EXPECT_TRUE(check_induction_step(Instance({{1, 3, 2, 1}})));
  EXPECT_THROW(check_induction_step(adversarial_family("none_late", 3)), PreconditionViolation);
}

TEST(ProofProperties, HoldOnSeededInstances) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst = small_instance(seed, 9);
    ASSERT_TRUE(check_prop1(inst)) << "seed " << seed;
    if (first_rejection(inst)) {
      ASSERT_TRUE(check_lemma1(inst)) << "seed " << seed;
      ASSERT_TRUE(check_induction_step(inst)) << "seed " << seed;
    }
  }
}
