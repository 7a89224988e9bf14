#include "morpheq/coincidence.hpp"

#include <algorithm>
#include <unordered_set>

namespace morpheq {

bool shortlex_less(const Block& x, const Block& y) {
  if (!(x.e == y.e)) return shortlex_less(x.e, y.e);
  return shortlex_less(x.f, y.f);
}

std::vector<Block> BlockSet::blocks() const {
  std::vector<Block> out;
  for (const Entry& entry : entries_) {
    if (const Block* b = std::get_if<Block>(&entry)) out.push_back(*b);
  }
  return out;
}

namespace {

constexpr std::array<char, 2> kLetters{'a', 'b'};

// The letter x with m(x) starting like `text`, if any. Unique for marked m.
std::optional<char> forced_letter(const BinaryMorphism& m, const Word& text) {
  for (char x : kLetters) {
    if (m.image(x).first() == text.first()) return x;
  }
  return std::nullopt;
}

BlockSet::Entry block_from(char start, const BinaryMorphism& g, const BinaryMorphism& h) {
  const Alphabet& target = g.target();
  const Word none = Word::empty(target);
  const std::size_t bound = std::max(g.max_image_length(), h.max_image_length());

  std::string e(1, start);
  std::string f;
  Overflow state = *overflow_advance(Overflow::balanced(target), g.image(start), none);
  std::vector<Overflow> trace{state};
  std::unordered_set<Overflow, OverflowHash> visited{state};

  while (!state.is_balanced()) {
    const bool g_ahead = state.side() == Lead::kGAhead;
    const BinaryMorphism& lagging = g_ahead ? h : g;
    std::optional<char> x = forced_letter(lagging, state.excess());
    std::optional<Overflow> next;
    if (x) {
      next = g_ahead ? overflow_advance(state, none, h.image(*x)) : overflow_advance(state, g.image(*x), none);
    }
    if (!next) return NoBlock{NoBlock::Reason::kDeadEnd, state, std::move(trace)};
    (g_ahead ? f : e).push_back(*x);
    state = std::move(*next);
    if (state.excess().size() >= bound) {
      throw InvariantViolation("block overflow exceeds the longest image length");
    }
    if (state.is_balanced()) break;
    trace.push_back(state);
    if (!visited.insert(state).second) return NoBlock{NoBlock::Reason::kCycle, state, std::move(trace)};
  }
  return Block{Word(e), Word(f)};
}

}  // namespace

BlockSet compute_blocks(const BinaryMorphism& g, const BinaryMorphism& h) {
  require_same_target(g, h);
  if (!is_marked(g) || !is_marked(h)) {
    throw InputError(InputErrorKind::kNotMarked, "compute_blocks needs two marked morphisms");
  }
  BlockSet blocks(block_from('a', g, h), block_from('b', g, h));
  const auto found = blocks.blocks();
  if (found.size() == 2 && found[0].f.first() == found[1].f.first()) {
    throw InvariantViolation("two blocks whose h-side words share a first letter");
  }
  return blocks;
}

std::vector<Block> split_minimal_pairs(const BinaryMorphism& g, const BinaryMorphism& h,
                                       const Word& u, const Word& v) {
  require_same_target(g, h);
  require_non_erasing(g, "g");
  require_non_erasing(h, "h");
  if (!(g.apply(u) == h.apply(v))) {
    throw InputError(InputErrorKind::kNotCoincidence,
                     "(" + u.str() + ", " + v.str() + ") is not a coincidence pair");
  }
  std::vector<Block> pieces;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t gi = 0;  // |g(u[..i])|
  std::size_t hj = 0;  // |h(v[..j])|
  std::size_t ci = 0;
  std::size_t cj = 0;
  while (i < u.size() || j < v.size()) {
    if (gi <= hj && i < u.size()) {
      gi += g.image(u[i++]).size();
    } else {
      hj += h.image(v[j++]).size();
    }
    if (gi == hj) {
      pieces.push_back({u.drop(ci).prefix(i - ci), v.drop(cj).prefix(j - cj)});
      ci = i;
      cj = j;
    }
  }
  return pieces;
}

std::vector<Block> factor_into_blocks(const BinaryMorphism& g, const BinaryMorphism& h,
                                      const BlockSet& blocks, const Word& u, const Word& v) {
  std::vector<Block> pieces = split_minimal_pairs(g, h, u, v);
  const std::vector<Block> known = blocks.blocks();
  for (const Block& piece : pieces) {
    if (std::find(known.begin(), known.end(), piece) == known.end()) {
      throw InputError(InputErrorKind::kNotFactorizable,
                       "minimal pair (" + piece.e.str() + ", " + piece.f.str() + ") is not a block");
    }
  }
  return pieces;
}

SuccessorPair successor_morphisms(const BlockSet& blocks) {
  const Block* from_a = blocks.block('a');
  const Block* from_b = blocks.block('b');
  if (!from_a || !from_b) {
    throw InputError(InputErrorKind::kTooFewBlocks, "successor morphisms need two blocks");
  }
  SuccessorPair pair{BinaryMorphism(from_a->e, from_b->e), BinaryMorphism(from_a->f, from_b->f)};
  if (!is_marked(pair.g1) || !is_marked(pair.h1)) {
    throw InvariantViolation("successor morphisms are not marked");
  }
  return pair;
}

Word lift_equality_word(const BinaryMorphism& g, const BinaryMorphism& h, const BlockSet& blocks,
                        const Word& w) {
  std::string lifted;
  for (const Block& piece : factor_into_blocks(g, h, blocks, w, w)) {
    lifted.push_back(piece.e.first());
  }
  Word w1(lifted);
  const SuccessorPair succ = successor_morphisms(blocks);
  if (!(succ.g1.apply(w1) == w) || !(succ.h1.apply(w1) == w)) {
    throw InvariantViolation("lifted word does not map back to " + w.str());
  }
  return w1;
}

std::vector<Block> enumerate_coincidence_pairs(const BinaryMorphism& g, const BinaryMorphism& h,
                                               std::size_t max_len, PairScope scope) {
  require_same_target(g, h);
  require_non_erasing(g, "g");
  require_non_erasing(h, "h");
  const Alphabet& target = g.target();
  const Word none = Word::empty(target);

  std::vector<Block> found;
  std::string u;
  std::string v;
  auto dfs = [&](auto&& self, const Overflow& state) -> void {
    if (state.is_balanced() && !u.empty()) {
      found.push_back({Word(u), Word(v)});
      if (scope == PairScope::kMinimal) return;
    }
    const bool extend_h = state.side() == Lead::kGAhead;
    std::string& side = extend_h ? v : u;
    if (side.size() >= max_len) return;
    for (char x : kLetters) {
      auto next = extend_h ? overflow_advance(state, none, h.image(x)) : overflow_advance(state, g.image(x), none);
      if (!next) continue;
      side.push_back(x);
      self(self, *next);
      side.pop_back();
    }
  };
  dfs(dfs, Overflow::balanced(target));
  std::sort(found.begin(), found.end(), [](const Block& x, const Block& y) { return shortlex_less(x, y); });
  return found;
}

}  // namespace morpheq
