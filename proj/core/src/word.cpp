#include "morpheq/word.hpp"

#include <algorithm>
#include <set>

namespace morpheq {

std::string_view to_string(InputErrorKind kind) {
  switch (kind) {
    case InputErrorKind::kInvalidLetter: return "invalid-letter";
    case InputErrorKind::kAlphabetMismatch: return "alphabet-mismatch";
    case InputErrorKind::kEmptyWord: return "empty-word";
    case InputErrorKind::kErasingMorphism: return "erasing-morphism";
    case InputErrorKind::kPeriodicMorphism: return "periodic-morphism";
    case InputErrorKind::kNotMarked: return "not-marked";
    case InputErrorKind::kNotCoincidence: return "not-a-coincidence-pair";
    case InputErrorKind::kNotFactorizable: return "not-factorizable";
    case InputErrorKind::kTooFewBlocks: return "too-few-blocks";
    case InputErrorKind::kInvalidConfig: return "invalid-config";
    case InputErrorKind::kMalformedInput: return "malformed-input";
  }
  return "unknown";
}

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  std::set<char> seen;
  for (char c : letters_) {
    if (!seen.insert(c).second) {
      throw InputError(InputErrorKind::kMalformedInput,
                       "alphabet '" + letters_ + "' repeats letter '" + std::string(1, c) + "'");
    }
  }
}

const Alphabet& Alphabet::binary() {
  static const Alphabet ab("ab");
  return ab;
}

Alphabet Alphabet::infer(std::string_view text) {
  std::set<char> letters(text.begin(), text.end());
  return Alphabet(std::string(letters.begin(), letters.end()));
}

std::size_t Alphabet::rank(char letter) const {
  auto pos = letters_.find(letter);
  if (pos == std::string::npos) {
    throw InputError(InputErrorKind::kInvalidLetter,
                     "letter '" + std::string(1, letter) + "' not in alphabet '" + letters_ + "'");
  }
  return pos;
}

Word::Word(std::string_view letters, const Alphabet& alphabet)
    : letters_(letters), alphabet_(alphabet) {
  for (char c : letters_) {
    if (!alphabet_.contains(c)) {
      throw InputError(InputErrorKind::kInvalidLetter,
                       "letter '" + std::string(1, c) + "' of word '" + letters_ +
                           "' not in alphabet '" + alphabet_.letters() + "'");
    }
  }
}

char Word::first() const {
  if (empty()) throw InputError(InputErrorKind::kEmptyWord, "first letter of the empty word");
  return letters_.front();
}

char Word::last() const {
  if (empty()) throw InputError(InputErrorKind::kEmptyWord, "last letter of the empty word");
  return letters_.back();
}

std::size_t Word::count(char letter) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

Word Word::prefix(std::size_t n) const {
  return Word(letters_.substr(0, std::min(n, size())), alphabet_, Unchecked{});
}

Word Word::drop(std::size_t n) const {
  if (n >= size()) return Word(std::string{}, alphabet_, Unchecked{});
  return Word(letters_.substr(n), alphabet_, Unchecked{});
}

Word Word::reversed() const {
  return Word(std::string(letters_.rbegin(), letters_.rend()), alphabet_, Unchecked{});
}

bool Word::is_prefix_of(const Word& other) const {
  require_same_alphabet(*this, other);
  return other.letters_.starts_with(letters_);
}

bool Word::is_suffix_of(const Word& other) const {
  require_same_alphabet(*this, other);
  return other.letters_.ends_with(letters_);
}

bool Word::comparable_with(const Word& other) const {
  return size() <= other.size() ? is_prefix_of(other) : other.is_prefix_of(*this);
}

Word Word::operator+(const Word& rhs) const {
  require_same_alphabet(*this, rhs);
  return Word(letters_ + rhs.letters_, alphabet_, Unchecked{});
}

Word& Word::operator+=(const Word& rhs) {
  require_same_alphabet(*this, rhs);
  letters_ += rhs.letters_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << (w.empty() ? std::string("ε") : w.str());
}

void require_same_alphabet(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet())) {
    throw InputError(InputErrorKind::kAlphabetMismatch,
                     "words over different alphabets '" + u.alphabet().letters() + "' and '" +
                         v.alphabet().letters() + "'");
  }
}

bool shortlex_less(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  if (u.size() != v.size()) return u.size() < v.size();
  const Alphabet& alpha = u.alphabet();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return alpha.rank(u[i]) < alpha.rank(v[i]);
  }
  return false;
}

Word power(const Word& u, std::size_t n) {
  Word out = Word::empty(u.alphabet());
  for (std::size_t i = 0; i < n; ++i) out += u;
  return out;
}

Word longest_common_prefix(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  std::size_t n = 0;
  const std::size_t limit = std::min(u.size(), v.size());
  while (n < limit && u[n] == v[n]) ++n;
  return u.prefix(n);
}

Word longest_common_suffix(const Word& u, const Word& v) {
  return longest_common_prefix(u.reversed(), v.reversed()).reversed();
}

namespace {

// border[i] = length of the longest proper border of u[0..i].
std::vector<std::size_t> failure_function(const std::string& s) {
  std::vector<std::size_t> border(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return border;
}

}  // namespace

PrimitiveRoot primitive_root(const Word& u) {
  if (u.empty()) throw InputError(InputErrorKind::kEmptyWord, "primitive root of the empty word");
  const std::size_t n = u.size();
  const std::size_t period = n - failure_function(u.str()).back();
  if (n % period == 0) return {u.prefix(period), n / period};
  return {u, 1};
}

bool is_primitive(const Word& u) { return primitive_root(u).exponent == 1; }

bool commutes(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  return u.str() + v.str() == v.str() + u.str();
}

Word max_u_prefix(const Word& v, const Word& u) {
  require_same_alphabet(u, v);
  if (u.empty()) throw InputError(InputErrorKind::kEmptyWord, "maximal u-prefix with empty u");
  std::size_t n = 0;
  while (n < v.size() && v[n] == u[n % u.size()]) ++n;
  return v.prefix(n);
}

bool are_conjugate(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  if (u.size() != v.size()) return false;
  return (u.str() + u.str()).find(v.str()) != std::string::npos;
}

std::vector<Word> shortlex_sorted_unique(std::vector<Word> words) {
  std::sort(words.begin(), words.end(), ShortlexLess{});
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

}  // namespace morpheq
