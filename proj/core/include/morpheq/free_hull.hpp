#pragma once

#include <optional>
#include <span>
#include <vector>

#include "morpheq/morphism.hpp"
#include "morpheq/word.hpp"

namespace morpheq {

/// One word with two distinct factorizations over a set.
struct DoubleFactorization {
  Word word;
  std::vector<Word> first;
  std::vector<Word> second;
};

struct CodeTest {
  bool is_code = true;
  std::optional<DoubleFactorization> witness;
};

/// Sardinas–Patterson test. Duplicates in `words` are ignored; the empty word
/// is rejected. When the set is not a code the witness is a shortest
/// ambiguity found by breadth-first search over dangling suffixes.
CodeTest is_code(std::span<const Word> words);

/// All factorizations of `w` over `words`, up to `limit` of them.
std::vector<std::vector<Word>> factorizations_over(const Word& w, std::span<const Word> words,
                                                   std::size_t limit = 2);

struct HullBasis {
  /// Shortlex-sorted minimal generating set of the free hull.
  std::vector<Word> basis;
  std::size_t rank() const noexcept { return basis.size(); }
};

/// Basis of the smallest free submonoid containing `words`. The result is
/// checked before returning: it is a code, every input factorizes over it,
/// every basis word is a prefix and a suffix of some input, and the first
/// (last) factors of the inputs cover the whole basis. A failed check throws
/// InvariantViolation.
HullBasis free_hull(std::span<const Word> words);

/// Bijection between a fresh alphabet and a hull basis. Fresh letters are
/// a, b, c, ... assigned in shortlex order of the basis words.
class Recoding {
 public:
  explicit Recoding(std::vector<Word> basis);

  const Alphabet& fresh_alphabet() const noexcept { return fresh_; }
  const std::vector<Word>& basis() const noexcept { return basis_; }
  const Word& decode_letter(char c) const { return basis_[fresh_.rank(c)]; }

  /// φ⁻¹: factorizes over the basis; throws InputError(kNotFactorizable).
  Word encode(const Word& w) const;
  /// φ: letter-wise substitution.
  Word decode(const Word& w) const;

 private:
  std::vector<Word> basis_;
  Alphabet fresh_;
};

struct Principalized {
  BinaryMorphism g;
  BinaryMorphism h;
  Recoding recoding;
};

/// Recodes g and h over the basis of the free hull of their four images.
Principalized principalize(const BinaryMorphism& g, const BinaryMorphism& h);

}  // namespace morpheq
