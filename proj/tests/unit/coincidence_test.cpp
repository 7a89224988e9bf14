#include <gtest/gtest.h>

#include "morpheq/coincidence.hpp"
#include "oracles.hpp"

using namespace morpheq;

namespace {

Word W(std::string_view s) { return Word(s); }
BinaryMorphism M(std::string_view a, std::string_view b) { return BinaryMorphism(a, b, Alphabet::binary()); }
Block B(std::string_view e, std::string_view f) { return Block{W(e), W(f)}; }

const BinaryMorphism kG = M("aabb", "b");
const BinaryMorphism kH = M("a", "bb");

TEST(ComputeBlocks, PinnedPair) {
  const BlockSet bs = compute_blocks(kG, kH);
  EXPECT_EQ(bs.blocks(), (std::vector<Block>{B("a", "aab"), B("bb", "b")}));
  ASSERT_NE(bs.block('a'), nullptr);
  EXPECT_EQ(*bs.block('a'), B("a", "aab"));
}

TEST(ComputeBlocks, NoBlockCycle) {
  const BlockSet bs = compute_blocks(M("ab", "b"), M("a", "ba"));
  EXPECT_EQ(bs.count(), 0u);
  for (char c : {'a', 'b'}) {
    const auto* nb = std::get_if<NoBlock>(&bs.entry(c));
    ASSERT_NE(nb, nullptr);
    EXPECT_EQ(nb->reason, NoBlock::Reason::kCycle);
  }
  const auto& trace = std::get<NoBlock>(bs.entry('a')).trace;
  EXPECT_NE(std::find(trace.begin(), trace.end(), Overflow::g_ahead(W("b"))), trace.end());
  const auto& trace_b = std::get<NoBlock>(bs.entry('b')).trace;
  EXPECT_NE(std::find(trace_b.begin(), trace_b.end(), Overflow::h_ahead(W("a"))), trace_b.end());
}

TEST(ComputeBlocks, IdenticalMarked) {
  EXPECT_EQ(compute_blocks(kG, kG).blocks(), (std::vector<Block>{B("a", "a"), B("b", "b")}));
}

TEST(ComputeBlocks, RequiresMarked) {
  try {
    compute_blocks(M("a", "aab"), kH);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.kind(), InputErrorKind::kNotMarked);
  }
}

TEST(FactorIntoBlocks, PinnedIdentities) {
  const BlockSet bs = compute_blocks(kG, kH);
  EXPECT_EQ(factor_into_blocks(kG, kH, bs, W("abb"), W("aabb")), (std::vector<Block>{B("a", "aab"), B("bb", "b")}));
  EXPECT_EQ(factor_into_blocks(kG, kH, bs, W("aabb"), W("aabaabb")),
            (std::vector<Block>{B("a", "aab"), B("a", "aab"), B("bb", "b")}));
  EXPECT_TRUE(factor_into_blocks(kG, kH, bs, Word(), Word()).empty());
}

TEST(FactorIntoBlocks, RejectsNonCoincidence) {
  const BlockSet bs = compute_blocks(kG, kH);
  try {
    factor_into_blocks(kG, kH, bs, W("a"), W("a"));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.kind(), InputErrorKind::kNotCoincidence);
  }
}

TEST(Successors, PinnedPair) {
  const SuccessorPair s = successor_morphisms(compute_blocks(kG, kH));
  EXPECT_EQ(s.g1, M("a", "bb"));
  EXPECT_EQ(s.h1, M("aab", "b"));
  EXPECT_TRUE(is_marked(s.g1));
  EXPECT_TRUE(is_marked(s.h1));
}

TEST(Successors, IdentityBlocks) {
  const SuccessorPair s = successor_morphisms(compute_blocks(kG, kG));
  EXPECT_EQ(s.g1, M("a", "b"));
  EXPECT_EQ(s.h1, M("a", "b"));
}

TEST(Successors, NeedTwoBlocks) {
  try {
    successor_morphisms(compute_blocks(M("ab", "b"), M("a", "ba")));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.kind(), InputErrorKind::kTooFewBlocks);
  }
}

TEST(Lift, EqualityWordsOfSwappedPair) {
  const BinaryMorphism g = M("aba", "b");
  const BinaryMorphism h = M("a", "bab");
  const BlockSet bs = compute_blocks(g, h);
  const SuccessorPair s = successor_morphisms(bs);
  for (const char* w : {"ab", "ba", "abba", "baab"}) {
    const Word lifted = lift_equality_word(g, h, bs, W(w));
    EXPECT_EQ(s.g1.apply(lifted), W(w));
    EXPECT_EQ(s.h1.apply(lifted), W(w));
  }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_coincidence_pairs(kG, kH, 8), (std::vector<Block>{B("a", "aab"), B("bb", "b")}));
  EXPECT_EQ(enumerate_coincidence_pairs(kG, kG, 2), (std::vector<Block>{B("a", "a"), B("b", "b")}));
  EXPECT_TRUE(enumerate_coincidence_pairs(M("ab", "b"), M("a", "ba"), 12).empty());
}

// The enumerator against a quadratic scan of all word pairs, on every pair
// of morphisms with images of length <= 2.
TEST(Enumerate, AgreesWithExhaustiveScan) {
  const auto images = oracle::all_strings(2);
  for (const auto& ga : images) {
    for (const auto& gb : images) {
      for (const auto& ha : images) {
        for (const auto& hb : images) {
          const BinaryMorphism g = M(ga, gb);
          const BinaryMorphism h = M(ha, hb);
          std::vector<Block> expected;
          for (const auto& [u, v] : oracle::minimal_coincidences(g, h, 5)) expected.push_back(B(u, v));
          std::sort(expected.begin(), expected.end(), [](const Block& x, const Block& y) { return shortlex_less(x, y); });
          ASSERT_EQ(enumerate_coincidence_pairs(g, h, 5), expected) << g << " " << h;
        }
      }
    }
  }
}

// Blocks of all marked pairs with images of length <= 3 against the scan.
TEST(ComputeBlocks, AgreesWithExhaustiveScanOnMarkedPairs) {
  const auto images = oracle::all_strings(3);
  std::size_t pairs = 0;
  for (const auto& ga : images) {
    for (const auto& gb : images) {
      const BinaryMorphism g = M(ga, gb);
      if (!is_marked(g)) continue;
      for (const auto& ha : images) {
        for (const auto& hb : images) {
          const BinaryMorphism h = M(ha, hb);
          if (!is_marked(h)) continue;
          ++pairs;
          std::vector<Block> expected;
          for (const auto& [u, v] : oracle::minimal_coincidences(g, h, 6)) expected.push_back(B(u, v));
          std::vector<Block> found;
          for (const Block& b : compute_blocks(g, h).blocks()) {
            if (b.e.size() <= 6 && b.f.size() <= 6) found.push_back(b);
          }
          std::sort(expected.begin(), expected.end(), [](const Block& x, const Block& y) { return shortlex_less(x, y); });
          std::sort(found.begin(), found.end(), [](const Block& x, const Block& y) { return shortlex_less(x, y); });
          ASSERT_EQ(found, expected) << g << " " << h;
        }
      }
    }
  }
  EXPECT_GT(pairs, 100u);
}

TEST(SplitMinimalPairs, ConcatenatesBack) {
  const auto parts = split_minimal_pairs(kG, kH, W("aabbabb"), W("aabaabbaabb"));
  std::string u;
  std::string v;
  for (const Block& b : parts) {
    u += b.e.str();
    v += b.f.str();
  }
  EXPECT_EQ(u, "aabbabb");
  EXPECT_EQ(v, "aabaabbaabb");
  EXPECT_EQ(parts.size(), 5u);
}

}  // namespace
