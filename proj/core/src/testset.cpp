#include "morpheq/testset.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace morpheq {

namespace {

std::vector<Word> checked_language(const std::vector<Word>& language) {
  for (const Word& w : language) {
    if (w.empty()) throw InputError(InputErrorKind::kEmptyWord, "language contains the empty word");
    if (!(w.alphabet() == Alphabet::binary())) {
      throw InputError(InputErrorKind::kAlphabetMismatch, "language words must be over {a,b}");
    }
  }
  return shortlex_sorted_unique(language);
}

bool covers(const std::vector<Word>& chosen, const std::vector<Word>& targets) {
  const std::vector<Word> have = rp(chosen);
  return std::all_of(targets.begin(), targets.end(), [&](const Word& t) {
    return std::find(have.begin(), have.end(), t) != have.end();
  });
}

}  // namespace

std::vector<Word> rp(const std::vector<Word>& language) {
  std::vector<Word> out;
  for (const Word& w : checked_language(language)) {
    for (Word& f : ratio_primitive_factorization(w)) out.push_back(std::move(f));
  }
  return shortlex_sorted_unique(std::move(out));
}

std::string_view to_string(TestSetRule rule) {
  switch (rule) {
    case TestSetRule::kDifferentRatios: return "different-ratios";
    case TestSetRule::kSameFirstLetterPair: return "same-first-letter-pair";
    case TestSetRule::kSmallRp: return "small-RP";
  }
  return "unknown";
}

TestSetReport test_set(const std::vector<Word>& language) {
  const std::vector<Word> words = checked_language(language);
  if (words.empty()) throw InputError(InputErrorKind::kMalformedInput, "test set of the empty language");

  TestSetReport report;
  report.rp_of_language = rp(words);

  const Ratio first_ratio = ratio(words.front());
  for (const Word& v : words) {
    if (!(ratio(v) == first_ratio)) {
      report.test_set = {words.front(), v};
      report.rule = TestSetRule::kDifferentRatios;
      return report;
    }
  }

  const std::vector<Word>& rps = report.rp_of_language;
  if (rps.size() >= 3) {
    for (std::size_t i = 0; i < rps.size() && report.t_rp.empty(); ++i) {
      for (std::size_t j = i + 1; j < rps.size(); ++j) {
        if (rps[i].first() == rps[j].first()) {
          report.t_rp = {rps[i], rps[j]};
          break;
        }
      }
    }
    if (report.t_rp.empty()) throw InvariantViolation("three ratio-primitive words without a shared first letter");
    report.rule = TestSetRule::kSameFirstLetterPair;
  } else {
    report.t_rp = rps;
    report.rule = TestSetRule::kSmallRp;
  }

  for (const Word& w : words) {
    if (covers({w}, report.t_rp)) {
      report.test_set = {w};
      return report;
    }
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (covers({words[i], words[j]}, report.t_rp)) {
        report.test_set = {words[i], words[j]};
        return report;
      }
    }
  }
  throw InvariantViolation("no two words of the language cover the chosen ratio-primitive words");
}

bool agree_on(const BinaryMorphism& g, const BinaryMorphism& h, const std::vector<Word>& words) {
  return std::all_of(words.begin(), words.end(), [&](const Word& w) { return g.apply(w) == h.apply(w); });
}

namespace {

std::string random_text(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::bernoulli_distribution coin;
  std::string s(len(rng), 'a');
  for (char& c : s) c = coin(rng) ? 'b' : 'a';
  return s;
}

// A periodic pair whose equality set is all words of ratio r (plus ε).
std::pair<BinaryMorphism, BinaryMorphism> ratio_locked_pair(std::mt19937_64& rng, const Ratio& r) {
  const std::uint64_t p = r.is_infinite() ? 1 : r.num();
  const std::uint64_t q = r.is_infinite() ? 0 : r.den();
  std::uniform_int_distribution<std::uint64_t> small(0, 2);
  std::uniform_int_distribution<std::uint64_t> step(1, 2);
  std::string root = random_text(rng, 1, 3);
  const std::uint64_t s = step(rng);
  const std::uint64_t ha = small(rng);
  const std::uint64_t gb = small(rng);
  const std::uint64_t ga = ha + q * s;
  const std::uint64_t hb = gb + p * s;
  auto pw = [&](std::uint64_t n) {
    std::string out;
    for (std::uint64_t i = 0; i < n; ++i) out += root;
    return Word(out);
  };
  return {BinaryMorphism(pw(ga), pw(gb)), BinaryMorphism(pw(ha), pw(hb))};
}

}  // namespace

TestSetCheck check_test_set(const std::vector<Word>& t, const std::vector<Word>& language,
                            std::size_t budget, std::uint64_t seed) {
  const std::vector<Word> lang = checked_language(language);
  const std::vector<Word> tset = checked_language(t);
  for (const Word& w : tset) {
    if (std::find(lang.begin(), lang.end(), w) == lang.end()) {
      throw InputError(InputErrorKind::kMalformedInput, "test set word " + w.str() + " is not in the language");
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> family(0, 3);
  TestSetCheck out;
  for (std::size_t trial = 0; trial < budget; ++trial) {
    std::optional<std::pair<BinaryMorphism, BinaryMorphism>> pair;
    const std::size_t kind = family(rng);
    if (kind <= 1 && !tset.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, tset.size() - 1);
      pair = ratio_locked_pair(rng, ratio(tset[pick(rng)]));
    } else if (kind == 2) {
      // E = {ab, ba}*, or its letter-swapped counterpart.
      BinaryMorphism g("aba", "b", Alphabet::binary());
      BinaryMorphism h("a", "bab", Alphabet::binary());
      if (std::bernoulli_distribution{}(rng)) pair.emplace(swap_letters(g), swap_letters(h));
      else pair.emplace(g, h);
    } else {
      pair.emplace(BinaryMorphism(Word(random_text(rng, 1, 4)), Word(random_text(rng, 1, 4))),
                   BinaryMorphism(Word(random_text(rng, 1, 4)), Word(random_text(rng, 1, 4))));
    }
    ++out.pairs_checked;
    const auto& [g, h] = *pair;
    if (!agree_on(g, h, tset)) continue;
    ++out.pairs_agreeing_on_t;
    if (!agree_on(g, h, lang)) {
      out.counterexample = pair;
      break;
    }
  }
  return out;
}

}  // namespace morpheq
