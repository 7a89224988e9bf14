#include <benchmark/benchmark.h>

#include "morpheq/coincidence.hpp"
#include "morpheq/equality.hpp"
#include "morpheq/free_hull.hpp"
#include "morpheq/fuzz.hpp"
#include "morpheq/testset.hpp"

using namespace morpheq;

namespace {

BinaryMorphism M(std::string_view a, std::string_view b) { return BinaryMorphism(a, b, Alphabet::binary()); }

void BM_EqualitySwappedPair(benchmark::State& state) {
  const BinaryMorphism g = M("aba", "b");
  const BinaryMorphism h = M("a", "bab");
  for (auto _ : state) benchmark::DoNotOptimize(classify(g, h, SearchLimits{}));
}
BENCHMARK(BM_EqualitySwappedPair);

// The pinned pair never balances, so the search runs to its word-length limit.
void BM_EqualityPinnedPair(benchmark::State& state) {
  const BinaryMorphism g = M("aabb", "b");
  const BinaryMorphism h = M("a", "bb");
  const SearchLimits limits{static_cast<std::size_t>(state.range(0)), 256, 1'000'000};
  for (auto _ : state) benchmark::DoNotOptimize(minimal_equality_words(g, h, limits));
}
BENCHMARK(BM_EqualityPinnedPair)->Arg(16)->Arg(64)->Arg(256);

void BM_EqualityRandomPairs(benchmark::State& state) {
  FuzzConfig cfg;
  cfg.max_image_len = static_cast<std::size_t>(state.range(0));
  std::vector<std::pair<BinaryMorphism, BinaryMorphism>> pairs;
  for (std::size_t t = 1; t <= 64; ++t) pairs.push_back(random_morphism_pair(cfg, t, PairFilter::kNonPeriodic));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [g, h] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(minimal_equality_words(g, h, SearchLimits{40, 128, 1'000'000}));
  }
}
BENCHMARK(BM_EqualityRandomPairs)->Arg(3)->Arg(5)->Arg(8);

void BM_ComputeBlocks(benchmark::State& state) {
  const BinaryMorphism g = M("aabb", "b");
  const BinaryMorphism h = M("a", "bb");
  for (auto _ : state) benchmark::DoNotOptimize(compute_blocks(g, h));
}
BENCHMARK(BM_ComputeBlocks);

void BM_EnumerateCoincidences(benchmark::State& state) {
  const BinaryMorphism g = M("aabb", "b");
  const BinaryMorphism h = M("a", "bb");
  const auto bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_coincidence_pairs(g, h, bound, PairScope::kAll));
}
BENCHMARK(BM_EnumerateCoincidences)->Arg(8)->Arg(12)->Arg(16);

void BM_FreeHull(benchmark::State& state) {
  const std::vector<Word> words{Word("abaab"), Word("aabab"), Word("ab"), Word("babaa"), Word("abab")};
  for (auto _ : state) benchmark::DoNotOptimize(free_hull(words));
}
BENCHMARK(BM_FreeHull);

void BM_TestSet(benchmark::State& state) {
  const std::vector<Word> lang{Word("abab"), Word("aabb"), Word("abba"), Word("baab"), Word("ab"), Word("ba")};
  for (auto _ : state) benchmark::DoNotOptimize(test_set(lang));
}
BENCHMARK(BM_TestSet);

void BM_FuzzBlocksSuite(benchmark::State& state) {
  FuzzConfig cfg;
  cfg.trials = 100;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(Suite::kBlocks, cfg, 0, cfg.trials));
}
BENCHMARK(BM_FuzzBlocksSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
