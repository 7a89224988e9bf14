#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "morpheq/error.hpp"

namespace morpheq {

/// An ordered finite set of single-character letters. Order matters for
/// shortlex comparisons and for letter counts in ratios.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view letters);

  /// The domain alphabet {a, b} of every binary morphism.
  static const Alphabet& binary();

  /// Sorted distinct letters occurring in `text`.
  static Alphabet infer(std::string_view text);

  bool contains(char letter) const noexcept {
    return letters_.find(letter) != std::string::npos;
  }
  /// Position of `letter` in the declared order; throws if absent.
  std::size_t rank(char letter) const;
  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& letters() const noexcept { return letters_; }
  char operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

/// A finite word over a declared alphabet. Values are immutable in practice:
/// every operation returns a new word.
class Word {
 public:
  /// The empty word over {a, b}.
  Word() : alphabet_(Alphabet::binary()) {}
  explicit Word(std::string_view letters, const Alphabet& alphabet = Alphabet::binary());

  static Word empty(const Alphabet& alphabet) { return Word(std::string_view{}, alphabet); }
  static Word letter(char c, const Alphabet& alphabet) { return Word(std::string_view(&c, 1), alphabet); }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::string& str() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  char first() const;
  char last() const;
  std::size_t count(char letter) const;

  /// First `n` letters (clamped to the length).
  Word prefix(std::size_t n) const;
  /// Letters from position `n` on (empty when n >= size()).
  Word drop(std::size_t n) const;
  Word reversed() const;

  bool is_prefix_of(const Word& other) const;
  bool is_suffix_of(const Word& other) const;
  /// Prefix-comparable: one is a prefix of the other.
  bool comparable_with(const Word& other) const;

  Word operator+(const Word& rhs) const;
  Word& operator+=(const Word& rhs);

  friend bool operator==(const Word& lhs, const Word& rhs) {
    return lhs.letters_ == rhs.letters_ && lhs.alphabet_ == rhs.alphabet_;
  }

 private:
  struct Unchecked {};
  Word(std::string letters, const Alphabet& alphabet, Unchecked)
      : letters_(std::move(letters)), alphabet_(alphabet) {}

  std::string letters_;
  Alphabet alphabet_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Throws InputError(kAlphabetMismatch) unless both words share an alphabet.
void require_same_alphabet(const Word& u, const Word& v);

/// Shortlex order: shorter first, then lexicographic by alphabet rank.
bool shortlex_less(const Word& u, const Word& v);

struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};

Word power(const Word& u, std::size_t n);

/// The maximal common prefix u ∧ v.
Word longest_common_prefix(const Word& u, const Word& v);
Word longest_common_suffix(const Word& u, const Word& v);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 0;
};

/// Primitive root by the border (failure function) method.
PrimitiveRoot primitive_root(const Word& u);
bool is_primitive(const Word& u);

/// uv == vu.
bool commutes(const Word& u, const Word& v);

/// Longest prefix of `v` that is a prefix of some power of `u`.
Word max_u_prefix(const Word& v, const Word& u);

bool are_conjugate(const Word& u, const Word& v);

/// Sorts by shortlex and removes duplicates.
std::vector<Word> shortlex_sorted_unique(std::vector<Word> words);

}  // namespace morpheq
