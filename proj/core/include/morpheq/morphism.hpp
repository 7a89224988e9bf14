#pragma once

#include <algorithm>

#include "morpheq/word.hpp"

namespace morpheq {

/// A morphism {a,b}* → Σ* given by the images of a and b.
class BinaryMorphism {
 public:
  /// Both images must share an alphabet, which becomes the target alphabet.
  BinaryMorphism(Word image_a, Word image_b);
  /// Convenience: images spelled as strings over `target`.
  BinaryMorphism(std::string_view image_a, std::string_view image_b, const Alphabet& target);

  const Word& image_a() const noexcept { return image_a_; }
  const Word& image_b() const noexcept { return image_b_; }
  /// Image of a domain letter ('a' or 'b').
  const Word& image(char letter) const;
  const Alphabet& target() const noexcept { return image_a_.alphabet(); }

  bool is_erasing() const noexcept { return image_a_.empty() || image_b_.empty(); }
  std::size_t max_image_length() const noexcept { return std::max(image_a_.size(), image_b_.size()); }

  /// Homomorphic image of a word over {a,b}.
  Word apply(const Word& w) const;
  Word apply(std::string_view domain_word) const { return apply(Word(domain_word)); }

  friend bool operator==(const BinaryMorphism&, const BinaryMorphism&) = default;

 private:
  Word image_a_;
  Word image_b_;
};

std::ostream& operator<<(std::ostream& os, const BinaryMorphism& m);

/// Images commute (covers erasing morphisms).
bool is_periodic(const BinaryMorphism& m);

/// z = m(ab) ∧ m(ba).
Word z_prefix(const BinaryMorphism& m);
/// Longest common suffix of m(ab) and m(ba).
Word z_suffix(const BinaryMorphism& m);

/// Images are nonempty and start with different letters.
bool is_marked(const BinaryMorphism& m);

/// The conjugate u ↦ z⁻¹·m(u)·z with z = z_prefix(m). Requires a non-periodic
/// morphism; the result is marked.
BinaryMorphism marked_version(const BinaryMorphism& m);

/// x ↦ reversal of m(x).
BinaryMorphism reverse_morphism(const BinaryMorphism& m);

/// m ∘ π where π exchanges a and b.
BinaryMorphism swap_letters(const BinaryMorphism& m);

/// Applies the letter exchange a ↔ b to a domain word.
Word swap_domain_letters(const Word& w);

/// Throws InputError(kErasingMorphism) if either image is empty.
void require_non_erasing(const BinaryMorphism& m, std::string_view role);

/// Throws InputError(kAlphabetMismatch) unless the targets agree.
void require_same_target(const BinaryMorphism& g, const BinaryMorphism& h);

}  // namespace morpheq
