#include <gtest/gtest.h>

#include "morpheq/fuzz.hpp"

using namespace morpheq;

namespace {

FuzzConfig small_config(std::size_t trials) {
  FuzzConfig cfg;
  cfg.seed = 12345;
  cfg.trials = trials;
  return cfg;
}

TEST(FuzzConfig, Validation) {
  FuzzConfig cfg;
  cfg.trials = 0;
  EXPECT_THROW(cfg.validate(), InputError);
  cfg.trials = 1;
  cfg.max_image_len = 0;
  EXPECT_THROW(cfg.validate(), InputError);
}

TEST(RandomPair, DeterministicPerSeed) {
  const FuzzConfig cfg = small_config(1);
  EXPECT_EQ(random_morphism_pair(cfg, 0), random_morphism_pair(cfg, 0));
  FuzzConfig other = cfg;
  other.seed = 99;
  bool differs = false;
  for (std::size_t t = 0; t < 8; ++t) differs = differs || !(random_morphism_pair(cfg, t) == random_morphism_pair(other, t));
  EXPECT_TRUE(differs);
}

TEST(RandomPair, Filters) {
  const FuzzConfig cfg = small_config(1);
  for (std::size_t t = 0; t < 200; ++t) {
    const auto [g, h] = random_morphism_pair(cfg, t, PairFilter::kNonPeriodic);
    ASSERT_FALSE(is_periodic(g));
    ASSERT_FALSE(is_periodic(h));
    ASSERT_LE(g.max_image_length(), cfg.max_image_len);
    const auto [mg, mh] = random_morphism_pair(cfg, t, PairFilter::kBothMarked);
    ASSERT_TRUE(is_marked(mg) && is_marked(mh));
    const auto [pg, ph] = random_morphism_pair(cfg, t, PairFilter::kBothPeriodic);
    ASSERT_TRUE(is_periodic(pg) && is_periodic(ph));
    ASSERT_FALSE(pg == ph);
    const auto [og, oh] = random_morphism_pair(cfg, t, PairFilter::kOnePeriodic);
    ASSERT_NE(is_periodic(og), is_periodic(oh));
    const auto [cg, ch] = random_morphism_pair(cfg, t, PairFilter::kPrincipalMarked);
    ASSERT_TRUE(is_marked(cg) || is_marked(ch));
  }
}

TEST(RandomPair, LargerTargetAlphabet) {
  FuzzConfig cfg = small_config(1);
  cfg.target_alphabet_size = 3;
  const auto [g, h] = random_morphism_pair(cfg, 4);
  EXPECT_EQ(g.target().letters(), "abc");
}

TEST(RunFuzz, AllSuitesPass) {
  const FuzzVerdict v = run_fuzz(small_config(60));
  for (const auto& [name, t] : v.invariants) {
    EXPECT_EQ(t.failed, 0u) << name << ": " << (t.failures.empty() ? "" : t.failures.front().witness);
  }
  EXPECT_TRUE(v.ok());
  EXPECT_GT(v.invariants.at("generators.rank").checked, 0u);
}

TEST(RunFuzz, IndependentOfWorkerCount) {
  FuzzConfig one = small_config(24);
  one.workers = 1;
  FuzzConfig three = one;
  three.workers = 3;
  const FuzzVerdict a = run_fuzz(one);
  const FuzzVerdict b = run_fuzz(three);
  ASSERT_EQ(a.invariants.size(), b.invariants.size());
  for (const auto& [name, t] : a.invariants) {
    EXPECT_EQ(t.checked, b.invariants.at(name).checked) << name;
    EXPECT_EQ(t.skipped, b.invariants.at(name).skipped) << name;
  }
}

TEST(RunSuite, PinnedTrialRunsBlocksOnPinnedPair) {
  const FuzzVerdict v = run_suite(Suite::kBlocks, small_config(1), 0, 1);
  EXPECT_EQ(v.invariants.at("blocks.first_letters").passed, 1u);
  EXPECT_EQ(v.invariants.at("blocks.successors").passed, 1u);
}

TEST(Verdict, RecordsWitnesses) {
  FuzzVerdict v;
  v.check("x", true, 0, "");
  v.check("x", false, 3, "w");
  v.skip("x");
  EXPECT_FALSE(v.ok());
  EXPECT_EQ(v.invariants["x"].checked, 2u);
  EXPECT_EQ(v.invariants["x"].skipped, 1u);
  ASSERT_EQ(v.invariants["x"].failures.size(), 1u);
  EXPECT_EQ(v.invariants["x"].failures[0].trial, 3u);
}

TEST(Suites, NamesRoundTrip) {
  for (Suite s : all_suites()) EXPECT_EQ(suite_from_string(to_string(s)), s);
  EXPECT_FALSE(suite_from_string("nope"));
}

}  // namespace
