#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "morpheq/fuzz.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<const char*> args, const std::string& input = "") {
  args.insert(args.begin(), "morpheq");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = morpheq::cli::run(static_cast<int>(args.size()), args.data(), in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kSwapped = R"({"g":{"a":"aba","b":"b"},"h":{"a":"a","b":"bab"}})";
const std::string kPinned = R"({"g":{"a":"aabb","b":"b"},"h":{"a":"a","b":"bb"}})";

TEST(Cli, Equality) {
  const Result r = run({"equality"}, kSwapped);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["classification"], "both-non-periodic");
  EXPECT_EQ(j["generators"], nlohmann::json({"ab", "ba"}));
  EXPECT_EQ(j["complete"], true);
  EXPECT_EQ(j["verification"]["two_word_shape"], 1);
  EXPECT_FALSE(j.contains("timing_ms"));
  EXPECT_TRUE(run({"equality", "--timing"}, kSwapped).json().contains("timing_ms"));
}

TEST(Cli, EqualityLimitsFlags) {
  const Result r = run({"equality", "--max-word-len", "3", "--max-states", "10"}, kPinned);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["limits"]["max_word_len"], 3);
  EXPECT_EQ(run({"equality", "--max-word-len", "0"}, kPinned).code, 1);
}

TEST(Cli, Blocks) {
  const Result r = run({"blocks", "--oracle", "--max-len", "8"}, kPinned);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["blocks"], nlohmann::json::parse(R"([{"e":"a","f":"aab"},{"e":"bb","f":"b"}])"));
  EXPECT_EQ(j["oracle"]["agrees"], true);
  EXPECT_EQ(j["successors"]["h1"]["a"], "aab");
  EXPECT_TRUE(j["cycles"].empty());
}

TEST(Blocks, UnmarkedPairIsTransformed) {
  const Result r = run({"blocks"}, R"({"g":{"a":"a","b":"aab"},"h":{"a":"aab","b":"b"}})");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.json().contains("transformed"));
}

TEST(Cli, BlocksCycle) {
  const Result r = run({"blocks"}, R"({"g":{"a":"ab","b":"b"},"h":{"a":"a","b":"ba"}})");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_TRUE(j["blocks"].empty());
  EXPECT_EQ(j["cycles"].size(), 2u);
  EXPECT_EQ(j["cycles"][0]["reason"], "cycle");
  EXPECT_TRUE(j["successors"].is_null());
}

TEST(Cli, AnalyzePeriodicHasNoBlocks) {
  const Result r = run({"analyze"}, R"({"g":{"a":"ab","b":"abab"},"h":{"a":"abab","b":"ab"}})");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["equality"]["classification"], "both-periodic");
  EXPECT_EQ(j["equality"]["k"], "1/1");
  EXPECT_FALSE(j.contains("blocks"));
}

TEST(Cli, AnalyzeNonPeriodic) {
  const Result r = run({"analyze"}, kPinned);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["marked"]["g"], true);
  EXPECT_EQ(j["hull_rank"], 2);
  EXPECT_EQ(j["blocks"]["blocks"].size(), 2u);
}

TEST(Cli, Hull) {
  const Result r = run({"hull"}, R"(["ab","aba","ba"])");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["basis"], nlohmann::json({"a", "b"}));
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["witness"]["word"], "ababa");
  EXPECT_FALSE(run({"hull"}, R"(["ab","ba"])").json().contains("witness"));
}

TEST(Cli, Principalize) {
  const Result r = run({"principalize"}, R"({"g":{"a":"ab","b":"abb"},"h":{"a":"abab","b":"b"}})");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["decode"], nlohmann::json::parse(R"({"a":"b","b":"ab"})"));
  EXPECT_EQ(j["g"]["b"], "ba");
  EXPECT_EQ(j["h"]["a"], "bb");
}

TEST(Cli, TestSetAndFactorize) {
  const Result t = run({"testset", "--check", "50"}, R"(["ab","ba","aabb"])");
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(t.json()["test_set"], nlohmann::json({"ab", "aabb"}));
  EXPECT_EQ(t.json()["rule"], "same-first-letter-pair");
  EXPECT_TRUE(t.json()["check"]["counterexample"].is_null());
  const Result f = run({"factorize"}, R"(["abba","aa"])");
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(f.json()["factorizations"][0]["factors"], nlohmann::json({"ab", "ba"}));
  EXPECT_EQ(f.json()["factorizations"][1]["ratio"], "infinity");
}

TEST(Cli, Fuzz) {
  const Result r = run({"fuzz", "--trials", "5", "--suite", "blocks", "--suite", "hull", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_TRUE(j["invariants"].contains("blocks.bifix"));
  EXPECT_EQ(run({"fuzz", "--trials", "0"}).code, 1);
  EXPECT_EQ(run({"fuzz", "--suite", "nope"}).code, 1);
}

TEST(Cli, FuzzSeedFromEnvironment) {
  ::setenv("MORPHEQ_SEED", "77", 1);
  const Result r = run({"fuzz", "--trials", "2", "--suite", "words", "--seed", "3"});
  ::unsetenv("MORPHEQ_SEED");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["seed"], 77);
}

TEST(Cli, Replayable) {
  const Result a = run({"fuzz", "--trials", "4", "--seed", "11"});
  const Result b = run({"fuzz", "--trials", "4", "--seed", "11"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"analyze"}, kSwapped).out, run({"analyze"}, kSwapped).out);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"hull"}, "{not json").code, 1);
  EXPECT_EQ(run({"equality"}, R"({"g":{"a":"a"}})").code, 1);
  EXPECT_EQ(run({"testset"}, R"(["abc"])").code, 1);
  EXPECT_EQ(run({"blocks"}, R"({"g":{"a":"ab","b":"abab"},"h":{"a":"a","b":"b"}})").code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  const Result bad = run({"hull"}, "[1]");
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, FuzzWitnessReplays) {
  using morpheq::Alphabet;
  using morpheq::BinaryMorphism;
  const Alphabet abc("abc");
  const std::string witness = morpheq::describe_pair(BinaryMorphism("ca", "b", abc), BinaryMorphism("c", "ab", abc));
  const Result r = run({"analyze"}, witness);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["g"]["a"], "ca");
  EXPECT_EQ(r.json()["h"]["alphabet"], "abc");
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

}  // namespace
