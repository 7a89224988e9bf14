#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "morpheq/morphism.hpp"
#include "morpheq/ratio.hpp"

namespace morpheq {

struct SearchLimits {
  std::size_t max_word_len = 64;
  std::size_t max_overflow_len = 256;
  std::size_t max_states = 1'000'000;

  /// Throws InputError(kInvalidConfig) unless every limit is positive.
  void validate() const;
};

/// The ratio every nonempty equality word must have, from image lengths alone.
struct RatioConstraint {
  enum class Kind { kFixed, kUnconstrained, kImpossible };
  Kind kind = Kind::kUnconstrained;
  std::optional<Ratio> ratio;  // set iff kind == kFixed
};

RatioConstraint ratio_constraint(const BinaryMorphism& g, const BinaryMorphism& h);

bool is_equality_word(const BinaryMorphism& g, const BinaryMorphism& h, const Word& w);

struct EqualitySearch {
  /// Minimal nonempty equality words found, shortlex-sorted.
  std::vector<Word> words;
  /// No limit cut the search: `words` is all of e(g, h).
  bool exhausted = false;
  std::size_t states = 0;
  /// Which limit stopped the search first, if any.
  std::string limit_hit;
};

/// Breadth-first search over words whose images stay comparable, keyed by
/// overflow. A state reached again by a longer (or shortlex-larger) prefix is
/// not re-expanded; instead the merge is recorded, and after the search every
/// merge that can still reach balance contributes its own minimal word. The
/// result therefore does not rely on any rank bound.
EqualitySearch minimal_equality_words(const BinaryMorphism& g, const BinaryMorphism& h,
                                      const SearchLimits& limits);

struct BothPeriodic {
  enum class Kind { kTrivial, kRatioLocked };
  Kind kind = Kind::kTrivial;
  std::optional<Ratio> k;  // set iff kRatioLocked
};

struct OnePeriodic {
  /// E(g,h) = alpha*; nullopt when the search ended without certainty.
  std::optional<Word> alpha;
  bool complete = false;
  std::string certificate;
};

struct BothNonPeriodic {
  std::vector<Word> generators;
  bool complete = false;
  std::string certificate;
};

/// g == h: every word is an equality word.
struct IdenticalMorphisms {};

struct EqualityReport {
  std::variant<IdenticalMorphisms, BothPeriodic, OnePeriodic, BothNonPeriodic> variant;
  std::optional<EqualitySearch> search;
};

/// Structure of E(g, h) by periodicity of the two morphisms.
EqualityReport classify(const BinaryMorphism& g, const BinaryMorphism& h, const SearchLimits& limits);

struct GeneratorVerification {
  std::vector<Word> generators;  // deduplicated
  std::vector<std::string> failures;
  /// i with generators = {aⁱb, baⁱ} up to renaming of letters.
  std::optional<std::size_t> two_word_shape;
  bool ok() const noexcept { return failures.empty(); }
};

/// {aⁱb, baⁱ} or {bⁱa, abⁱ} for some i ≥ 1.
std::optional<std::size_t> two_word_shape(const std::vector<Word>& words);

/// Checks each word is a minimal equality word and, for two words, that
/// they differ in first and last letters, form a bifix code and have the
/// two-word shape.
GeneratorVerification verify_generators(const BinaryMorphism& g, const BinaryMorphism& h,
                                        const std::vector<Word>& generators);

}  // namespace morpheq
