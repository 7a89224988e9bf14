#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morpheq/morphism.hpp"
#include "morpheq/ratio.hpp"

namespace morpheq {

/// All ratio-primitive factors of the words of `language`, shortlex-sorted.
std::vector<Word> rp(const std::vector<Word>& language);

enum class TestSetRule { kDifferentRatios, kSameFirstLetterPair, kSmallRp };

std::string_view to_string(TestSetRule rule);

struct TestSetReport {
  std::vector<Word> test_set;  // subset of L, at most two words
  std::vector<Word> rp_of_language;
  std::vector<Word> t_rp;      // empty under kDifferentRatios
  TestSetRule rule = TestSetRule::kSmallRp;
};

/// A test set of at most two words for a finite nonempty language over {a,b}.
/// Ties are broken shortlex so reports are reproducible.
TestSetReport test_set(const std::vector<Word>& language);

/// Morphisms agree on every word of `words`.
bool agree_on(const BinaryMorphism& g, const BinaryMorphism& h, const std::vector<Word>& words);

struct TestSetCheck {
  std::size_t pairs_checked = 0;
  std::size_t pairs_agreeing_on_t = 0;
  /// A pair agreeing on T but not on L.
  std::optional<std::pair<BinaryMorphism, BinaryMorphism>> counterexample;
  bool ok() const noexcept { return !counterexample.has_value(); }
};

/// Samples `budget` morphism pairs and looks for one that agrees on `t` but
/// not on `language`. Half the samples are drawn from periodic families whose
/// equality sets are ratio-locked to a ratio of `t`, so agreement on `t` is
/// not left to chance.
TestSetCheck check_test_set(const std::vector<Word>& t, const std::vector<Word>& language,
                            std::size_t budget, std::uint64_t seed);

}  // namespace morpheq
