#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "morpheq/morphism.hpp"
#include "morpheq/overflow.hpp"

namespace morpheq {

/// A coincidence pair (e, f) with g(e) = h(f). Blocks are the minimal ones.
struct Block {
  Word e;
  Word f;
  friend bool operator==(const Block&, const Block&) = default;
};

bool shortlex_less(const Block& x, const Block& y);

/// Why the forced extension from a starting letter never balances.
struct NoBlock {
  enum class Reason { kCycle, kDeadEnd };
  Reason reason;
  /// The repeated state (kCycle) or the state with no comparable continuation.
  Overflow state;
  /// Every state visited from the starting letter, in order.
  std::vector<Overflow> trace;
};

class BlockSet {
 public:
  using Entry = std::variant<Block, NoBlock>;

  BlockSet(Entry from_a, Entry from_b) : entries_{std::move(from_a), std::move(from_b)} {}

  /// Entry for blocks whose g-side word starts with `letter`.
  const Entry& entry(char letter) const { return entries_.at(letter == 'a' ? 0 : 1); }
  const Block* block(char letter) const { return std::get_if<Block>(&entry(letter)); }
  std::vector<Block> blocks() const;
  std::size_t count() const { return blocks().size(); }

 private:
  std::array<Entry, 2> entries_;
};

/// Blocks of a pair of marked morphisms. From each starting letter the lagging
/// side is extended by the unique letter whose image is comparable with the
/// current overflow until the overflow balances (a block), repeats (a cycle)
/// or admits no continuation (a dead end).
BlockSet compute_blocks(const BinaryMorphism& g, const BinaryMorphism& h);

/// Cuts (u, v) at every point where the partial images agree. The pieces are
/// the unique factorization into minimal coincidence pairs.
std::vector<Block> split_minimal_pairs(const BinaryMorphism& g, const BinaryMorphism& h,
                                       const Word& u, const Word& v);

/// Factorization of a coincidence pair over computed blocks.
std::vector<Block> factor_into_blocks(const BinaryMorphism& g, const BinaryMorphism& h,
                                      const BlockSet& blocks, const Word& u, const Word& v);

struct SuccessorPair {
  BinaryMorphism g1;
  BinaryMorphism h1;
};

/// g₁ = (a→e, b→e′), h₁ = (a→f, b→f′), where (e, f) starts with a.
SuccessorPair successor_morphisms(const BlockSet& blocks);

/// The unique w₁ with g₁(w₁) = h₁(w₁) = w for an equality word w of (g, h).
Word lift_equality_word(const BinaryMorphism& g, const BinaryMorphism& h, const BlockSet& blocks,
                        const Word& w);

enum class PairScope { kMinimal, kAll };

/// Exhaustive search for coincidence pairs with |u|, |v| <= max_len, built
/// by always extending the lagging side (g on ties) with both letters.
/// Results are in shortlex order of (u, v).
std::vector<Block> enumerate_coincidence_pairs(const BinaryMorphism& g, const BinaryMorphism& h,
                                               std::size_t max_len,
                                               PairScope scope = PairScope::kMinimal);

}  // namespace morpheq
