#include "morpheq/ratio.hpp"

#include <numeric>

namespace morpheq {

Ratio::Ratio(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
  if (num == 0 && den == 0) {
    throw InputError(InputErrorKind::kMalformedInput, "ratio 0/0 is undefined");
  }
  if (den_ == 0) {
    num_ = 1;
    return;
  }
  const std::uint64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

std::string Ratio::to_string() const {
  if (is_infinite()) return "infinity";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.to_string(); }

namespace {

struct LetterCounts {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

void require_binary(const Word& u) {
  if (u.alphabet().size() != 2) {
    throw InputError(InputErrorKind::kAlphabetMismatch,
                     "ratio needs a two-letter alphabet, got '" + u.alphabet().letters() + "'");
  }
  if (u.empty()) throw InputError(InputErrorKind::kEmptyWord, "ratio of the empty word is undefined");
}

// a/b == c/d without division; both sides nonzero-denominator or infinite.
bool same_ratio(LetterCounts x, LetterCounts y) { return x.a * y.b == y.a * x.b; }

}  // namespace

Ratio ratio(const Word& u) {
  require_binary(u);
  const char a = u.alphabet()[0];
  const std::uint64_t na = u.count(a);
  return Ratio(na, u.size() - na);
}

std::vector<Word> ratio_primitive_factorization(const Word& u) {
  require_binary(u);
  const char a = u.alphabet()[0];
  const std::uint64_t na = u.count(a);
  const LetterCounts whole{na, u.size() - na};

  std::vector<Word> factors;
  std::size_t start = 0;
  LetterCounts run;
  for (std::size_t i = 0; i < u.size(); ++i) {
    (u[i] == a ? run.a : run.b) += 1;
    if (same_ratio(run, whole)) {
      factors.push_back(u.drop(start).prefix(i + 1 - start));
      start = i + 1;
      run = {};
    }
  }
  return factors;
}

bool is_ratio_primitive(const Word& u) {
  const Ratio whole = ratio(u);
  for (std::size_t n = 1; n < u.size(); ++n) {
    if (ratio(u.prefix(n)) == whole) return false;
  }
  return true;
}

}  // namespace morpheq
