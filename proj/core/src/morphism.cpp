#include "morpheq/morphism.hpp"

namespace morpheq {

BinaryMorphism::BinaryMorphism(Word image_a, Word image_b)
    : image_a_(std::move(image_a)), image_b_(std::move(image_b)) {
  require_same_alphabet(image_a_, image_b_);
}

BinaryMorphism::BinaryMorphism(std::string_view image_a, std::string_view image_b,
                               const Alphabet& target)
    : BinaryMorphism(Word(image_a, target), Word(image_b, target)) {}

const Word& BinaryMorphism::image(char letter) const {
  if (letter == 'a') return image_a_;
  if (letter == 'b') return image_b_;
  throw InputError(InputErrorKind::kInvalidLetter,
                   "domain letter '" + std::string(1, letter) + "' is not a or b");
}

Word BinaryMorphism::apply(const Word& w) const {
  if (!(w.alphabet() == Alphabet::binary())) {
    throw InputError(InputErrorKind::kAlphabetMismatch,
                     "morphism applied to a word over '" + w.alphabet().letters() + "'");
  }
  std::string out;
  out.reserve(w.count('a') * image_a_.size() + w.count('b') * image_b_.size());
  for (char c : w.str()) out += (c == 'a' ? image_a_ : image_b_).str();
  return Word(out, target());
}

std::ostream& operator<<(std::ostream& os, const BinaryMorphism& m) {
  return os << "(a→" << m.image_a() << ", b→" << m.image_b() << ")";
}

bool is_periodic(const BinaryMorphism& m) { return commutes(m.image_a(), m.image_b()); }

Word z_prefix(const BinaryMorphism& m) {
  return longest_common_prefix(m.image_a() + m.image_b(), m.image_b() + m.image_a());
}

Word z_suffix(const BinaryMorphism& m) {
  return longest_common_suffix(m.image_a() + m.image_b(), m.image_b() + m.image_a());
}

bool is_marked(const BinaryMorphism& m) {
  return !m.is_erasing() && m.image_a().first() != m.image_b().first();
}

void require_non_erasing(const BinaryMorphism& m, std::string_view role) {
  if (m.is_erasing()) {
    throw InputError(InputErrorKind::kErasingMorphism,
                     std::string(role) + " is erasing: " + m.image_a().str() + "," + m.image_b().str());
  }
}

void require_same_target(const BinaryMorphism& g, const BinaryMorphism& h) {
  if (!(g.target() == h.target())) {
    throw InputError(InputErrorKind::kAlphabetMismatch,
                     "morphisms have different target alphabets '" + g.target().letters() +
                         "' and '" + h.target().letters() + "'");
  }
}

BinaryMorphism marked_version(const BinaryMorphism& m) {
  require_non_erasing(m, "morphism");
  if (is_periodic(m)) {
    throw InputError(InputErrorKind::kPeriodicMorphism, "marked version of a periodic morphism");
  }
  const Word z = z_prefix(m);
  auto conjugate = [&z](const Word& image) {
    Word shifted = image + z;
    if (!z.is_prefix_of(shifted)) {
      throw InvariantViolation("z is not a prefix of image·z for image " + image.str());
    }
    return shifted.drop(z.size());
  };
  BinaryMorphism out(conjugate(m.image_a()), conjugate(m.image_b()));
  if (!is_marked(out)) throw InvariantViolation("marked version is not marked");
  return out;
}

BinaryMorphism reverse_morphism(const BinaryMorphism& m) {
  return BinaryMorphism(m.image_a().reversed(), m.image_b().reversed());
}

BinaryMorphism swap_letters(const BinaryMorphism& m) { return BinaryMorphism(m.image_b(), m.image_a()); }

Word swap_domain_letters(const Word& w) {
  std::string out = w.str();
  for (char& c : out) c = (c == 'a') ? 'b' : 'a';
  return Word(out, w.alphabet());
}

}  // namespace morpheq
