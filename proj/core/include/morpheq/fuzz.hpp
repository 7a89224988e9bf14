#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morpheq/equality.hpp"
#include "morpheq/morphism.hpp"

namespace morpheq {

/// Groups of invariants, each with its own sample generator.
enum class Suite {
  kWords,      // word algebra, morphism identities, principalization
  kHull,       // free hull postconditions on random word sets
  kBlocks,     // blocks of marked pairs against the exhaustive enumerator
  kGenerators,   // minimal equality words of non-periodic pairs
  kPeriodic,   // periodic classifications against brute-force membership
  kTestSet,    // test sets of random finite languages
};

std::string_view to_string(Suite suite);
std::optional<Suite> suite_from_string(std::string_view name);
std::vector<Suite> all_suites();

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::size_t max_image_len = 5;
  std::size_t target_alphabet_size = 2;
  SearchLimits limits{40, 128, 1'000'000};
  /// 0 picks the hardware concurrency.
  std::size_t workers = 0;
  std::vector<Suite> suites = all_suites();

  /// Throws InputError(kInvalidConfig).
  void validate() const;
};

enum class PairFilter { kAny, kNonPeriodic, kBothPeriodic, kOnePeriodic, kBothMarked, kPrincipalMarked };

/// Deterministic in (cfg.seed, trial, filter). Images are nonempty and at most
/// cfg.max_image_len long, except that periodic pairs may be erasing. Pairs
/// drawn with a filter other than kAny have g != h.
std::pair<BinaryMorphism, BinaryMorphism> random_morphism_pair(const FuzzConfig& cfg, std::size_t trial,
                                                               PairFilter filter = PairFilter::kAny);

struct FuzzFailure {
  std::size_t trial = 0;
  std::string witness;
};

struct Tally {
  std::size_t checked = 0;
  std::size_t passed = 0;
  /// Samples where the check could not run (a search stopped at its limits).
  std::size_t skipped = 0;
  std::vector<FuzzFailure> failures;  // first few, in trial order
  std::size_t failed = 0;

  void merge(const Tally& other);
};

struct FuzzVerdict {
  std::map<std::string, Tally> invariants;

  bool ok() const;
  void merge(const FuzzVerdict& other);

  void pass(const std::string& name);
  void skip(const std::string& name);
  void fail(const std::string& name, std::size_t trial, std::string witness);
  /// pass() if `holds`, otherwise fail() with the witness.
  void check(const std::string& name, bool holds, std::size_t trial, const std::string& witness);
};

/// Trials [first, last) of one suite. Trial 0 of the pair-based suites is
/// the pinned pair g=(a→aabb, b→b), h=(a→a, b→bb).
FuzzVerdict run_suite(Suite suite, const FuzzConfig& cfg, std::size_t first, std::size_t last);

/// cfg.trials trials of every configured suite, spread over worker threads.
/// The result does not depend on the number of workers.
FuzzVerdict run_fuzz(const FuzzConfig& cfg);

/// The pair as CLI input JSON, {"g":{"a":..,"b":..},"h":{..}}, so a witness
/// can be replayed with `morpheq analyze`.
std::string describe_pair(const BinaryMorphism& g, const BinaryMorphism& h);

}  // namespace morpheq
