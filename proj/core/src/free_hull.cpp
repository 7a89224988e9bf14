#include "morpheq/free_hull.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace morpheq {

namespace {

std::vector<Word> normalized_set(std::span<const Word> words) {
  for (const Word& w : words) {
    if (w.empty()) throw InputError(InputErrorKind::kEmptyWord, "empty word in a code candidate");
    require_same_alphabet(w, words.front());
  }
  return shortlex_sorted_unique(std::vector<Word>(words.begin(), words.end()));
}

// Two partial factorizations where `ahead` spells `behind`·dangling.
struct Ambiguity {
  std::vector<Word> ahead;
  std::vector<Word> behind;
  std::string dangling;
};

Word concat(const std::vector<Word>& parts, const Alphabet& alphabet) {
  Word out = Word::empty(alphabet);
  for (const Word& p : parts) out += p;
  return out;
}

}  // namespace

CodeTest is_code(std::span<const Word> words) {
  if (words.empty()) return {};
  const std::vector<Word> set = normalized_set(words);
  const Alphabet& alphabet = set.front().alphabet();

  std::deque<Ambiguity> queue;
  std::unordered_set<std::string> seen;
  for (const Word& x : set) {
    for (const Word& y : set) {
      if (x.size() < y.size() && x.is_prefix_of(y)) {
        std::string dangling = y.str().substr(x.size());
        if (seen.insert(dangling).second) queue.push_back({{y}, {x}, std::move(dangling)});
      }
    }
  }

  while (!queue.empty()) {
    Ambiguity node = std::move(queue.front());
    queue.pop_front();
    for (const Word& x : set) {
      const std::string& s = node.dangling;
      const std::string& xs = x.str();
      if (xs == s) {
        std::vector<Word> behind = node.behind;
        behind.push_back(x);
        DoubleFactorization witness{concat(node.ahead, alphabet), node.ahead, std::move(behind)};
        return {false, std::move(witness)};
      }
      if (xs.size() < s.size() && s.starts_with(xs)) {
        std::string next = s.substr(xs.size());
        if (!seen.insert(next).second) continue;
        Ambiguity child = node;
        child.behind.push_back(x);
        child.dangling = std::move(next);
        queue.push_back(std::move(child));
      } else if (s.size() < xs.size() && xs.starts_with(s)) {
        std::string next = xs.substr(s.size());
        if (!seen.insert(next).second) continue;
        std::vector<Word> new_ahead = node.behind;
        new_ahead.push_back(x);
        queue.push_back({std::move(new_ahead), node.ahead, std::move(next)});
      }
    }
  }
  return {};
}

std::vector<std::vector<Word>> factorizations_over(const Word& w, std::span<const Word> words,
                                                   std::size_t limit) {
  const std::vector<Word> set = words.empty() ? std::vector<Word>{} : normalized_set(words);
  for (const Word& x : set) require_same_alphabet(x, w);
  const std::string& s = w.str();
  const std::size_t n = s.size();

  // completes[i]: w[i..] factorizes over the set.
  std::vector<char> completes(n + 1, 0);
  completes[n] = 1;
  for (std::size_t i = n; i-- > 0;) {
    for (const Word& x : set) {
      if (i + x.size() <= n && completes[i + x.size()] && s.compare(i, x.size(), x.str()) == 0) {
        completes[i] = 1;
        break;
      }
    }
  }

  std::vector<std::vector<Word>> out;
  std::vector<Word> path;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (out.size() >= limit) return;
    if (i == n) {
      out.push_back(path);
      return;
    }
    for (const Word& x : set) {
      if (i + x.size() <= n && completes[i + x.size()] && s.compare(i, x.size(), x.str()) == 0) {
        path.push_back(x);
        self(self, i + x.size());
        path.pop_back();
      }
    }
  };
  if (completes[0]) dfs(dfs, 0);
  return out;
}

namespace {

void validate_hull(std::span<const Word> inputs, const std::vector<Word>& basis) {
  if (!is_code(basis).is_code) throw InvariantViolation("free hull basis is not a code");
  std::unordered_set<std::string> first_factors;
  std::unordered_set<std::string> last_factors;
  for (const Word& x : inputs) {
    auto fs = factorizations_over(x, basis, 1);
    if (fs.empty()) throw InvariantViolation("input word " + x.str() + " does not factorize over the hull basis");
    first_factors.insert(fs.front().front().str());
    last_factors.insert(fs.front().back().str());
  }
  for (const Word& y : basis) {
    const bool is_prefix = std::any_of(inputs.begin(), inputs.end(), [&](const Word& x) { return y.is_prefix_of(x); });
    const bool is_suffix = std::any_of(inputs.begin(), inputs.end(), [&](const Word& x) { return y.is_suffix_of(x); });
    if (!is_prefix || !is_suffix) {
      throw InvariantViolation("hull basis word " + y.str() + " is not both a prefix and a suffix of an input");
    }
    if (!first_factors.contains(y.str()) || !last_factors.contains(y.str())) {
      throw InvariantViolation("hull basis word " + y.str() + " starts or ends no recoded input");
    }
  }
}

}  // namespace

HullBasis free_hull(std::span<const Word> words) {
  if (words.empty()) return {};
  std::vector<Word> current = normalized_set(words);
  // Each round replaces the longer head y = x·s of an ambiguity by s, which
  // stays in the hull and strictly shortens the total length.
  while (true) {
    CodeTest test = is_code(current);
    if (test.is_code) break;
    const Word& x = test.witness->first.front();
    const Word& y = test.witness->second.front();
    const Word& shorter = x.size() < y.size() ? x : y;
    const Word& longer = x.size() < y.size() ? y : x;
    if (!shorter.is_prefix_of(longer) || shorter == longer) {
      throw InvariantViolation("ambiguity heads are not proper prefix-comparable");
    }
    Word rest = longer.drop(shorter.size());
    std::erase(current, longer);
    current.push_back(std::move(rest));
    current = shortlex_sorted_unique(std::move(current));
  }
  validate_hull(words, current);
  return {std::move(current)};
}

namespace {

constexpr std::string_view kFreshLetters =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

}  // namespace

Recoding::Recoding(std::vector<Word> basis) : basis_(shortlex_sorted_unique(std::move(basis))) {
  if (basis_.size() > kFreshLetters.size()) {
    throw InputError(InputErrorKind::kMalformedInput, "hull rank exceeds the fresh-letter pool");
  }
  fresh_ = Alphabet(kFreshLetters.substr(0, basis_.size()));
}

Word Recoding::encode(const Word& w) const {
  auto fs = factorizations_over(w, basis_, 1);
  if (fs.empty()) {
    throw InputError(InputErrorKind::kNotFactorizable, "word " + w.str() + " is not over the hull basis");
  }
  std::string out;
  for (const Word& piece : fs.front()) {
    auto it = std::find(basis_.begin(), basis_.end(), piece);
    out.push_back(fresh_[static_cast<std::size_t>(it - basis_.begin())]);
  }
  return Word(out, fresh_);
}

Word Recoding::decode(const Word& w) const {
  if (!(w.alphabet() == fresh_)) {
    throw InputError(InputErrorKind::kAlphabetMismatch, "decode expects a word over the fresh alphabet");
  }
  Word out = Word::empty(basis_.front().alphabet());
  for (char c : w.str()) out += decode_letter(c);
  return out;
}

Principalized principalize(const BinaryMorphism& g, const BinaryMorphism& h) {
  require_same_target(g, h);
  require_non_erasing(g, "g");
  require_non_erasing(h, "h");
  const std::vector<Word> images{g.image_a(), g.image_b(), h.image_a(), h.image_b()};
  Recoding recoding(free_hull(images).basis);
  BinaryMorphism g2(recoding.encode(g.image_a()), recoding.encode(g.image_b()));
  BinaryMorphism h2(recoding.encode(h.image_a()), recoding.encode(h.image_b()));
  return {std::move(g2), std::move(h2), std::move(recoding)};
}

}  // namespace morpheq
