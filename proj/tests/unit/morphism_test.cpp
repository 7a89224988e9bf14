#include <gtest/gtest.h>

#include <random>

#include "morpheq/morphism.hpp"
#include "oracles.hpp"

using namespace morpheq;

namespace {

Word W(std::string_view s) { return Word(s); }
BinaryMorphism M(std::string_view a, std::string_view b) { return BinaryMorphism(a, b, Alphabet::binary()); }

TEST(Apply, PinnedIdentities) {
  const BinaryMorphism g = M("aabb", "b");
  const BinaryMorphism h = M("a", "bb");
  EXPECT_EQ(g.apply("aabb"), W("aabbaabbbb"));
  EXPECT_EQ(h.apply("aabaabb"), W("aabbaabbbb"));
  EXPECT_EQ(g.apply("abb"), W("aabbbb"));
  EXPECT_EQ(h.apply("aabb"), W("aabbbb"));
  EXPECT_EQ(g.apply(""), Word());
}

TEST(Apply, DomainMustBeBinary) {
  const BinaryMorphism m("c", "cc", Alphabet("c"));
  EXPECT_EQ(m.apply("ab"), Word("ccc", Alphabet("c")));
  EXPECT_THROW(m.apply(Word("c", Alphabet("abc"))), InputError);
}

TEST(Construct, ImagesShareAlphabet) {
  EXPECT_THROW(BinaryMorphism(W("a"), Word("c", Alphabet("abc"))), InputError);
}

TEST(Periodic, Examples) {
  EXPECT_TRUE(is_periodic(M("ab", "abab")));
  EXPECT_FALSE(is_periodic(M("aabb", "b")));
  EXPECT_TRUE(is_periodic(M("ab", "")));
}

TEST(ZPrefix, Examples) {
  EXPECT_EQ(z_prefix(M("a", "aab")), W("aa"));
  EXPECT_EQ(z_prefix(M("aabb", "b")), Word());
  EXPECT_EQ(z_prefix(M("aba", "b")), Word());
}

TEST(ZSuffix, Examples) {
  EXPECT_EQ(z_suffix(M("a", "aab")), Word());
  EXPECT_EQ(z_suffix(M("a", "bb")), Word());
  EXPECT_EQ(z_suffix(M("ab", "b")), W("b"));
}

TEST(Marked, Examples) {
  EXPECT_TRUE(is_marked(M("aabb", "b")));
  EXPECT_FALSE(is_marked(M("a", "aab")));
  EXPECT_FALSE(is_marked(M("ab", "abab")));
  EXPECT_FALSE(is_marked(M("", "b")));
}

TEST(MarkedVersion, Example) {
  const BinaryMorphism h = M("a", "aab");
  const BinaryMorphism sharp = marked_version(h);
  EXPECT_EQ(sharp, M("a", "baa"));
  const Word z = W("aa");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    std::string w(rng() % 12, 'a');
    for (char& c : w) c = rng() % 2 ? 'b' : 'a';
    ASSERT_EQ(z + sharp.apply(w), h.apply(w) + z) << w;
  }
}

TEST(MarkedVersion, MarkedIsFixed) {
  EXPECT_EQ(marked_version(M("aabb", "b")), M("aabb", "b"));
  EXPECT_EQ(marked_version(M("ab", "b")), M("ab", "b"));
}

TEST(MarkedVersion, RejectsPeriodicAndErasing) {
  try {
    marked_version(M("ab", "abab"));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.kind(), InputErrorKind::kPeriodicMorphism);
  }
  try {
    marked_version(M("ab", ""));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.kind(), InputErrorKind::kErasingMorphism);
  }
}

// |z_prefix| is the minimum of |h(a·x) ∧ h(b·y)| over long x, y.
TEST(ZPrefix, AgreesWithExtensions) {
  for (const auto& ia : oracle::all_strings(3)) {
    for (const auto& ib : oracle::all_strings(3)) {
      const BinaryMorphism h = M(ia, ib);
      if (is_periodic(h)) continue;
      std::size_t best = SIZE_MAX;
      for (const auto& x : oracle::all_strings(5, "ab", 5)) {
        for (const auto& y : oracle::all_strings(5, "ab", 5)) {
          best = std::min(best, longest_common_prefix(h.apply("a" + x), h.apply("b" + y)).size());
        }
      }
      ASSERT_EQ(z_prefix(h).size(), best) << ia << " " << ib;
    }
  }
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse_morphism(M("aab", "b")), M("baa", "b"));
  EXPECT_EQ(reverse_morphism(reverse_morphism(M("aab", "ab"))), M("aab", "ab"));
}

TEST(Swap, ExchangesDomainLetters) {
  const BinaryMorphism m = M("aab", "ba");
  EXPECT_EQ(swap_letters(m), M("ba", "aab"));
  for (const auto& w : oracle::all_strings(5)) {
    ASSERT_EQ(swap_letters(m).apply(w), m.apply(swap_domain_letters(W(w))));
  }
}

TEST(SameTarget, Required) {
  EXPECT_THROW(require_same_target(M("a", "b"), BinaryMorphism("a", "c", Alphabet("abc"))), InputError);
}

}  // namespace
