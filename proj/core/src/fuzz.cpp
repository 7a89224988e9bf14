#include "morpheq/fuzz.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "morpheq/coincidence.hpp"
#include "morpheq/free_hull.hpp"
#include "morpheq/overflow.hpp"
#include "morpheq/ratio.hpp"
#include "morpheq/testset.hpp"

namespace morpheq {

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::kWords: return "words";
    case Suite::kHull: return "hull";
    case Suite::kBlocks: return "blocks";
    case Suite::kGenerators: return "generators";
    case Suite::kPeriodic: return "periodic";
    case Suite::kTestSet: return "testset";
  }
  return "unknown";
}

std::vector<Suite> all_suites() {
  return {Suite::kWords, Suite::kHull, Suite::kBlocks, Suite::kGenerators, Suite::kPeriodic, Suite::kTestSet};
}

std::optional<Suite> suite_from_string(std::string_view name) {
  for (Suite s : all_suites()) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

void FuzzConfig::validate() const {
  if (trials == 0) throw InputError(InputErrorKind::kInvalidConfig, "trials must be positive");
  if (max_image_len == 0) throw InputError(InputErrorKind::kInvalidConfig, "max_image_len must be at least 1");
  if (target_alphabet_size < 2 || target_alphabet_size > 26) {
    throw InputError(InputErrorKind::kInvalidConfig, "target_alphabet_size must be between 2 and 26");
  }
  limits.validate();
}

void Tally::merge(const Tally& other) {
  checked += other.checked;
  passed += other.passed;
  skipped += other.skipped;
  failed += other.failed;
  for (const FuzzFailure& f : other.failures) {
    if (failures.size() < 5) failures.push_back(f);
  }
}

bool FuzzVerdict::ok() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const auto& kv) { return kv.second.failed == 0; });
}

void FuzzVerdict::merge(const FuzzVerdict& other) {
  for (const auto& [name, tally] : other.invariants) invariants[name].merge(tally);
}

void FuzzVerdict::pass(const std::string& name) {
  Tally& t = invariants[name];
  ++t.checked;
  ++t.passed;
}

void FuzzVerdict::skip(const std::string& name) { ++invariants[name].skipped; }

void FuzzVerdict::fail(const std::string& name, std::size_t trial, std::string witness) {
  Tally& t = invariants[name];
  ++t.checked;
  ++t.failed;
  if (t.failures.size() < 5) t.failures.push_back({trial, std::move(witness)});
}

void FuzzVerdict::check(const std::string& name, bool holds, std::size_t trial, const std::string& witness) {
  if (holds) pass(name);
  else fail(name, trial, witness);
}

std::string describe_pair(const BinaryMorphism& g, const BinaryMorphism& h) {
  std::ostringstream os;
  const std::string alphabet =
      g.target().letters() == "ab" ? "" : R"(,"alphabet":")" + g.target().letters() + '"';
  os << R"({"g":{"a":")" << g.image_a().str() << R"(","b":")" << g.image_b().str() << '"' << alphabet
     << R"(},"h":{"a":")" << h.image_a().str() << R"(","b":")" << h.image_b().str() << '"' << alphabet << "}}";
  return os.str();
}

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial, std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(std::uint64_t{trial} >> 32),
                    salt};
  return std::mt19937_64(seq);
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Word random_word(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t min_len, std::size_t max_len) {
  std::string s(uniform(rng, min_len, max_len), ' ');
  for (char& c : s) c = alphabet[uniform(rng, 0, alphabet.size() - 1)];
  return Word(s, alphabet);
}

Alphabet target_alphabet(const FuzzConfig& cfg) {
  return Alphabet(std::string_view("abcdefghijklmnopqrstuvwxyz").substr(0, cfg.target_alphabet_size));
}

BinaryMorphism random_morphism(std::mt19937_64& rng, const Alphabet& target, std::size_t max_len) {
  return BinaryMorphism(random_word(rng, target, 1, max_len), random_word(rng, target, 1, max_len));
}

BinaryMorphism random_periodic(std::mt19937_64& rng, const Word& root, std::size_t max_len, bool allow_erasing) {
  const std::size_t top = std::max<std::size_t>(1, max_len / root.size());
  const std::size_t lo = allow_erasing ? 0 : 1;
  return BinaryMorphism(power(root, uniform(rng, lo, top)), power(root, uniform(rng, lo, top)));
}

BinaryMorphism pinned_g() { return BinaryMorphism("aabb", "b", Alphabet::binary()); }
BinaryMorphism pinned_h() { return BinaryMorphism("a", "bb", Alphabet::binary()); }

const std::vector<Word>& all_words_up_to(std::size_t n) {
  static const std::map<std::size_t, std::vector<Word>> cache = [] {
    std::map<std::size_t, std::vector<Word>> out;
    for (std::size_t len : {8u, 10u}) {
      std::vector<Word> words;
      for (std::size_t l = 1; l <= len; ++l) {
        for (std::size_t bits = 0; bits < (std::size_t{1} << l); ++bits) {
          std::string s(l, 'a');
          for (std::size_t i = 0; i < l; ++i) {
            if (bits >> (l - 1 - i) & 1U) s[i] = 'b';
          }
          words.emplace_back(s);
        }
      }
      out.emplace(len, std::move(words));
    }
    return out;
  }();
  return cache.at(n);
}

std::string join(const std::vector<Word>& words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) out += (i ? "," : "") + words[i].str();
  return out + "}";
}

bool pair_prefix(const Block& x, const Block& y) { return x.e.is_prefix_of(y.e) && x.f.is_prefix_of(y.f); }
bool pair_suffix(const Block& x, const Block& y) { return x.e.is_suffix_of(y.e) && x.f.is_suffix_of(y.f); }

// Number of ways (u, v) splits into a sequence of the given blocks, capped at 2.
std::size_t block_factorization_count(const Word& u, const Word& v, const std::vector<Block>& blocks) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  auto count = [&](auto&& self, std::size_t i, std::size_t j) -> std::size_t {
    if (i == u.size() && j == v.size()) return 1;
    if (auto it = memo.find({i, j}); it != memo.end()) return it->second;
    std::size_t total = 0;
    for (const Block& b : blocks) {
      if (u.str().compare(i, b.e.size(), b.e.str()) == 0 && i + b.e.size() <= u.size() &&
          v.str().compare(j, b.f.size(), b.f.str()) == 0 && j + b.f.size() <= v.size()) {
        total = std::min<std::size_t>(2, total + self(self, i + b.e.size(), j + b.f.size()));
      }
    }
    memo[{i, j}] = total;
    return total;
  };
  return count(count, 0, 0);
}

// ---------------------------------------------------------------- words

void check_forced_letters(const BinaryMorphism& g, const BinaryMorphism& h, std::size_t trial, FuzzVerdict& v) {
  const Word z = z_prefix(h);
  const std::vector<Block> pairs = enumerate_coincidence_pairs(g, h, 7, PairScope::kAll);
  // (u, v) -> letters that follow on the side whose next letter is forced.
  std::map<std::pair<std::string, std::string>, std::set<char>> next_u;
  std::map<std::pair<std::string, std::string>, std::set<char>> next_v;
  for (const Block& p : pairs) {
    for (std::size_t i = 0; i < p.e.size(); ++i) {
      const Word u = p.e.prefix(i);
      const Word gu = g.apply(u);
      for (std::size_t j = 0; j < p.f.size(); ++j) {
        const Word vv = p.f.prefix(j);
        const Word hv = h.apply(vv);
        if (!gu.comparable_with(hv) || gu == hv + z) continue;
        const auto diff = static_cast<long long>(gu.size()) - static_cast<long long>(hv.size());
        if (diff < static_cast<long long>(z.size())) next_u[{u.str(), vv.str()}].insert(p.e[i]);
        if (diff > static_cast<long long>(z.size())) next_v[{u.str(), vv.str()}].insert(p.f[j]);
      }
    }
  }
  bool holds = true;
  std::string witness;
  for (const auto* table : {&next_u, &next_v}) {
    for (const auto& [key, letters] : *table) {
      if (letters.size() > 1) {
        holds = false;
        witness = describe_pair(g, h) + " prefix (" + key.first + ", " + key.second + ")";
      }
    }
  }
  v.check("coincidence.forced_letter", holds, trial, witness);

  // Incomparable first coordinates meet where g(u) = h(v)·z.
  bool meets = true;
  for (std::size_t x = 0; x < pairs.size() && meets; ++x) {
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      if (pairs[x].e.comparable_with(pairs[y].e)) continue;
      const Word u = longest_common_prefix(pairs[x].e, pairs[y].e);
      const Word w = longest_common_prefix(pairs[x].f, pairs[y].f);
      if (!(g.apply(u) == h.apply(w) + z)) {
        meets = false;
        witness = describe_pair(g, h) + " pairs (" + pairs[x].e.str() + "," + pairs[x].f.str() + ") (" +
                  pairs[y].e.str() + "," + pairs[y].f.str() + ")";
        break;
      }
    }
  }
  v.check("coincidence.meet_offset", meets, trial, witness);
}

void run_words_trial(const FuzzConfig& cfg, std::size_t trial, FuzzVerdict& v) {
  auto rng = trial_rng(cfg.seed, trial, 11);
  const Alphabet& ab = Alphabet::binary();
  const Alphabet abc("abc");
  const Alphabet& alpha = uniform(rng, 0, 3) == 0 ? abc : ab;

  const Word u = random_word(rng, alpha, 0, 8);
  const Word w = random_word(rng, alpha, 0, 8);
  {
    const Word p = longest_common_prefix(u, w);
    const bool maximal = p.size() == std::min(u.size(), w.size()) || u[p.size()] != w[p.size()];
    v.check("word.lcp", p == longest_common_prefix(w, u) && p.is_prefix_of(u) && p.is_prefix_of(w) && maximal,
            trial, u.str() + " " + w.str());
  }
  if (!u.empty()) {
    const PrimitiveRoot r = primitive_root(u);
    // Brute force: the shortest divisor-length prefix whose power is u.
    std::size_t brute = u.size();
    for (std::size_t d = 1; d < u.size(); ++d) {
      if (u.size() % d == 0 && power(u.prefix(d), u.size() / d) == u) {
        brute = d;
        break;
      }
    }
    const PrimitiveRoot rr = primitive_root(r.root);
    v.check("word.primitive_root",
            r.root.size() == brute && power(r.root, r.exponent) == u && rr.root == r.root && rr.exponent == 1, trial,
            u.str());
  }
  {
    bool brute = u.size() == w.size() && u.empty();
    for (std::size_t i = 0; i < u.size() && !brute; ++i) {
      brute = u.size() == w.size() && u.drop(i) + u.prefix(i) == w;
    }
    v.check("word.conjugate", are_conjugate(u, w) == brute, trial, u.str() + " " + w.str());
  }
  if (!w.empty()) {
    Word brute = Word::empty(alpha);
    const Word long_power = power(w, u.size() / w.size() + 2);
    for (std::size_t n = 0; n <= u.size(); ++n) {
      if (u.prefix(n).is_prefix_of(long_power)) brute = u.prefix(n);
    }
    v.check("word.max_u_prefix", max_u_prefix(u, w) == brute, trial, u.str() + " " + w.str());
  }

  // The periodicity lemma and the prefix-of-powers check need related words to bite.
  {
    const Word base = random_word(rng, ab, 1, 3);
    const Word x = uniform(rng, 0, 1) ? power(base, uniform(rng, 1, 3)) : random_word(rng, ab, 1, 6);
    const Word y = uniform(rng, 0, 1) ? power(base, uniform(rng, 1, 3)) : random_word(rng, ab, 1, 6);
    const std::size_t need = x.size() + y.size();
    const Word xs = power(x, need / x.size() + 1);
    const Word ys = power(y, need / y.size() + 1);
    if (longest_common_prefix(xs, ys).size() >= need) {
      v.check("word.periodicity_lemma", commutes(x, y), trial, x.str() + " " + y.str());
    }
    const Word lead = power(y, 3).prefix(uniform(rng, 1, 3 * y.size()));
    if ((lead + y).is_prefix_of(power(y, lead.size() / y.size() + 3))) {
      v.check("word.prefix_of_powers", commutes(lead, y), trial, lead.str() + " " + y.str());
    }
  }

  // Ratio-primitive factorization.
  {
    const Word r = random_word(rng, ab, 1, 10);
    const std::vector<Word> factors = ratio_primitive_factorization(r);
    Word joined = Word::empty(ab);
    bool ok = true;
    for (const Word& f : factors) {
      joined += f;
      ok = ok && is_ratio_primitive(f) && ratio(f) == ratio(r) && ratio_primitive_factorization(f).size() == 1;
    }
    v.check("ratio.factorization", ok && joined == r, trial, r.str());
  }

  // Overflow replay: any interleaving of g-images and h-images yields the
  // direct comparison of g(x) against h(y).
  {
    const BinaryMorphism g = random_morphism(rng, ab, cfg.max_image_len);
    const BinaryMorphism h = random_morphism(rng, ab, cfg.max_image_len);
    const Word x = random_word(rng, ab, 0, 5);
    const Word y = random_word(rng, ab, 0, 5);
    std::optional<Overflow> state = Overflow::balanced(ab);
    std::size_t i = 0;
    std::size_t j = 0;
    while (state && (i < x.size() || j < y.size())) {
      const bool take_g = j == y.size() || (i < x.size() && uniform(rng, 0, 1));
      const Word none = Word::empty(ab);
      state = take_g ? overflow_advance(*state, g.image(x[i++]), none) : overflow_advance(*state, none, h.image(y[j++]));
    }
    const Word gx = g.apply(x);
    const Word hy = h.apply(y);
    std::optional<Overflow> direct;
    if (hy.is_prefix_of(gx)) direct = Overflow::g_ahead(gx.drop(hy.size()));
    else if (gx.is_prefix_of(hy)) direct = Overflow::h_ahead(hy.drop(gx.size()));
    // A dead intermediate state means the final images are incomparable too.
    v.check("overflow.replay", (state.has_value() && direct.has_value() && *state == *direct) || (!state && !direct),
            trial, describe_pair(g, h) + " " + x.str() + "/" + y.str());
  }

  // Morphism identities on a random non-periodic morphism.
  const auto [g, h] = random_morphism_pair(cfg, trial, PairFilter::kNonPeriodic);
  const Word x = random_word(rng, ab, 0, 6);
  const Word y = random_word(rng, ab, 0, 6);
  {
    const Word z = z_prefix(h);
    const Word lhs = longest_common_prefix(h.apply(Word("a") + x) + z, h.apply(Word("b") + y) + z);
    v.check("morphism.z_extension", lhs == z && z.size() < h.image_a().size() + h.image_b().size(), trial,
            describe_pair(g, h) + " " + x.str() + "/" + y.str());
  }
  {
    const BinaryMorphism sharp = marked_version(h);
    const Word z = z_prefix(h);
    v.check("morphism.marked_version", is_marked(sharp) && z + sharp.apply(x) == h.apply(x) + z, trial,
            describe_pair(g, h) + " " + x.str());
    v.check("morphism.gprefix", sharp.apply(longest_common_prefix(x, y)) ==
                                    longest_common_prefix(sharp.apply(x), sharp.apply(y)),
            trial, describe_pair(sharp, h) + " " + x.str() + "/" + y.str());
  }
  {
    const Word zs = z_suffix(h);
    const BinaryMorphism rev = reverse_morphism(h);
    bool ok = zs == z_prefix(rev).reversed() && reverse_morphism(rev) == h;
    const BinaryMorphism rev_sharp = marked_version(rev);
    for (char c : {'a', 'b'}) ok = ok && rev_sharp.image(c).reversed() + zs == zs + h.image(c);
    v.check("morphism.z_suffix", ok, trial, describe_pair(g, h));
    v.check("morphism.swap", swap_letters(h).apply(x) == h.apply(swap_domain_letters(x)), trial,
            describe_pair(g, h) + " " + x.str());
  }
  {
    // Long images of a·x and b·y meet exactly at h(ab) ∧ h(ba).
    const Word& hx = h.image_a();
    const Word& hy = h.image_b();
    const Word meet = longest_common_prefix(hx + hy, hy + hx);
    const Word left = h.apply(Word("a") + x);
    const Word right = h.apply(Word("b") + y);
    if (left.size() >= meet.size() && right.size() >= meet.size()) {
      v.check("morphism.image_meet", longest_common_prefix(left, right) == meet, trial,
              describe_pair(g, h) + " " + x.str() + "/" + y.str());
    }
  }

  // Principalization.
  {
    const Principalized p = principalize(g, h);
    bool marks = true;
    if (is_marked(g)) marks = marks && is_marked(p.g);
    if (is_marked(h)) marks = marks && is_marked(p.h);
    if (is_marked(reverse_morphism(g))) marks = marks && is_marked(reverse_morphism(p.g));
    if (is_marked(reverse_morphism(h))) marks = marks && is_marked(reverse_morphism(p.h));
    v.check("principalize.markedness", marks, trial, describe_pair(g, h));
    v.check("principalize.decode",
            p.recoding.decode(p.g.image_a()) == g.image_a() && p.recoding.decode(p.g.image_b()) == g.image_b() &&
                p.recoding.decode(p.h.image_a()) == h.image_a() && p.recoding.decode(p.h.image_b()) == h.image_b(),
            trial, describe_pair(g, h));
    v.check("principalize.coincidence",
            enumerate_coincidence_pairs(g, h, 6, PairScope::kAll) ==
                enumerate_coincidence_pairs(p.g, p.h, 6, PairScope::kAll),
            trial, describe_pair(g, h));
    const EqualitySearch s = minimal_equality_words(g, h, SearchLimits{20, 64, 20'000});
    if (!s.words.empty()) {
      const bool one = is_marked(p.g) || is_marked(p.h);
      const bool rev = is_marked(reverse_morphism(p.g)) || is_marked(reverse_morphism(p.h));
      v.check("principalize.marked_member", one && rev, trial, describe_pair(g, h));
    }
  }

  // Forced letters and meet offsets need a marked first morphism.
  if (is_marked(g)) check_forced_letters(g, h, trial, v);
  else if (is_marked(h)) check_forced_letters(h, g, trial, v);
}

// ----------------------------------------------------------------- hull

void run_hull_trial(const FuzzConfig& cfg, std::size_t trial, FuzzVerdict& v) {
  auto rng = trial_rng(cfg.seed, trial, 22);
  const Alphabet abc("abc");
  const Alphabet& alpha = uniform(rng, 0, 4) == 0 ? abc : Alphabet::binary();
  std::vector<Word> words(uniform(rng, 1, 5));
  for (Word& w : words) w = random_word(rng, alpha, 1, 6);
  const std::string witness = join(words);

  HullBasis hull;
  try {
    hull = free_hull(words);
  } catch (const InvariantViolation& e) {
    v.fail("hull.self_check", trial, witness + ": " + e.what());
    return;
  }
  v.pass("hull.self_check");
  v.check("hull.code", is_code(hull.basis).is_code, trial, witness);

  bool factorize = true;
  std::set<std::string> firsts;
  std::set<std::string> lasts;
  for (const Word& w : words) {
    auto fs = factorizations_over(w, hull.basis, 2);
    factorize = factorize && fs.size() == 1;
    if (!fs.empty()) {
      firsts.insert(fs.front().front().str());
      lasts.insert(fs.front().back().str());
    }
  }
  v.check("hull.factorize", factorize, trial, witness);

  bool prefix_suffix = true;
  for (const Word& y : hull.basis) {
    prefix_suffix = prefix_suffix && std::any_of(words.begin(), words.end(), [&](const Word& x) { return y.is_prefix_of(x); }) &&
                    std::any_of(words.begin(), words.end(), [&](const Word& x) { return y.is_suffix_of(x); });
  }
  v.check("hull.prefix_suffix", prefix_suffix, trial, witness);

  // After recoding over a fresh alphabet, first and last letters cover it.
  const Recoding rec(hull.basis);
  std::set<char> first_letters;
  std::set<char> last_letters;
  for (const Word& w : words) {
    const Word coded = rec.encode(w);
    first_letters.insert(coded.first());
    last_letters.insert(coded.last());
  }
  const std::set<char> fresh(rec.fresh_alphabet().letters().begin(), rec.fresh_alphabet().letters().end());
  v.check("hull.letters", first_letters == fresh && last_letters == fresh, trial, witness);

  v.check("hull.idempotent", free_hull(hull.basis).basis == hull.basis, trial, witness);

  std::vector<Word> shuffled = words;
  shuffled.push_back(words[uniform(rng, 0, words.size() - 1)]);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  v.check("hull.permutation", free_hull(shuffled).basis == hull.basis, trial, witness);

  const std::vector<Word> distinct = shortlex_sorted_unique(words);
  const CodeTest test = is_code(distinct);
  if (!test.is_code) {
    // Defect theorem: a non-code has a strictly smaller hull rank.
    v.check("hull.defect", hull.rank() < distinct.size(), trial, witness);
    const auto& wit = *test.witness;
    Word a = Word::empty(alpha);
    Word b = Word::empty(alpha);
    for (const Word& p : wit.first) a += p;
    for (const Word& p : wit.second) b += p;
    v.check("code.witness", a == wit.word && b == wit.word && !(wit.first.front() == wit.second.front()), trial,
            witness);
  } else {
    v.check("hull.code_is_own_hull", hull.basis == distinct, trial, witness);
  }
}

// --------------------------------------------------------------- blocks

std::optional<std::size_t> leading_run(const Word& w, char x) {
  std::size_t s = 0;
  while (s < w.size() && w[s] == x) ++s;
  if (s == 0 || s == w.size()) return std::nullopt;
  return s;  // w = x^s y ...
}

// An equality word x^s y u and a coincidence pair
// (x^r y v, x^q y v) force s = r = q.
void check_leading_runs(const BinaryMorphism& g, const BinaryMorphism& h, const std::vector<Word>& equality_words,
                       const std::vector<Block>& pairs, std::size_t trial, FuzzVerdict& v) {
  for (char x : {'a', 'b'}) {
    std::set<std::size_t> s_values;
    for (const Word& w : equality_words) {
      if (auto s = leading_run(w, x)) s_values.insert(*s);
    }
    if (s_values.empty()) continue;
    bool ok = s_values.size() == 1;
    for (const Block& p : pairs) {
      auto r = leading_run(p.e, x);
      auto q = leading_run(p.f, x);
      if (!r || !q || !(p.e.drop(*r + 1) == p.f.drop(*q + 1))) continue;
      ok = ok && *r == *q && s_values.contains(*r);
    }
    v.check("generators.leading_run", ok, trial, describe_pair(g, h) + " letter " + std::string(1, x));
  }
}

void run_blocks_trial(const FuzzConfig& cfg, std::size_t trial, FuzzVerdict& v) {
  const auto [g, h] = trial == 0 ? std::pair{pinned_g(), pinned_h()}
                                 : random_morphism_pair(cfg, trial, PairFilter::kBothMarked);
  const std::string witness = describe_pair(g, h);
  constexpr std::size_t kBound = 12;

  std::optional<BlockSet> blocks;
  try {
    blocks = compute_blocks(g, h);
  } catch (const InvariantViolation& e) {
    v.fail("blocks.compute", trial, witness + ": " + e.what());
    return;
  }
  v.pass("blocks.compute");
  const std::vector<Block> found = blocks->blocks();
  v.check("blocks.rank", found.size() <= 2, trial, witness);
  if (found.size() == 2) {
    v.check("blocks.first_letters", found[0].e.first() != found[1].e.first() && found[0].f.first() != found[1].f.first(),
            trial, witness);
  }

  const std::vector<Block> minimal = enumerate_coincidence_pairs(g, h, kBound);
  std::vector<Block> expected;
  for (const Block& b : found) {
    if (b.e.size() <= kBound && b.f.size() <= kBound) expected.push_back(b);
  }
  std::sort(expected.begin(), expected.end(), [](const Block& x, const Block& y) { return shortlex_less(x, y); });
  v.check("blocks.enumerator", minimal == expected, trial, witness);

  bool replay = true;
  for (const Block& b : found) {
    std::optional<Overflow> state = Overflow::balanced(g.target());
    for (const Block& step : split_minimal_pairs(g, h, b.e, b.f)) {
      for (char c : step.e.str()) state = state ? overflow_advance(*state, g.image(c), Word::empty(g.target())) : state;
      for (char c : step.f.str()) state = state ? overflow_advance(*state, Word::empty(g.target()), h.image(c)) : state;
    }
    replay = replay && state && state->is_balanced();
  }
  v.check("overflow.block_replay", replay, trial, witness);

  bool bifix = true;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (i != j && (pair_prefix(minimal[i], minimal[j]) || pair_suffix(minimal[i], minimal[j]))) bifix = false;
    }
  }
  v.check("blocks.bifix", bifix, trial, witness);

  const std::vector<Block> all = enumerate_coincidence_pairs(g, h, kBound, PairScope::kAll);
  bool unique = true;
  for (const Block& p : all) {
    unique = unique && block_factorization_count(p.e, p.f, found) == 1 &&
             factor_into_blocks(g, h, *blocks, p.e, p.f).size() >= 1;
  }
  v.check("blocks.unique_factorization", unique, trial, witness);

  std::vector<Word> equality_words;
  for (const Block& p : all) {
    if (p.e == p.f) equality_words.push_back(p.e);
  }
  if (found.size() == 2) {
    bool lifted = true;
    try {
      successor_morphisms(*blocks);
      for (const Word& w : equality_words) lift_equality_word(g, h, *blocks, w);
    } catch (const std::exception&) {
      lifted = false;
    }
    v.check("blocks.successors", lifted, trial, witness);
  }

  const BinaryMorphism rg = reverse_morphism(g);
  const BinaryMorphism rh = reverse_morphism(h);
  if (is_marked(rg) && is_marked(rh)) {
    const std::vector<Block> rev = compute_blocks(rg, rh).blocks();
    v.check("blocks.reversed_first_letters",
            rev.size() < 2 || (rev[0].e.first() != rev[1].e.first() && rev[0].f.first() != rev[1].f.first()), trial,
            witness);
  }

  if (!(g == h)) {
    const EqualitySearch s = minimal_equality_words(g, h, SearchLimits{24, 64, 20'000});
    std::vector<Word> words = equality_words;
    words.insert(words.end(), s.words.begin(), s.words.end());
    check_leading_runs(g, h, words, all, trial, v);
  }
}

// ------------------------------------------------------------ generators

std::vector<Word> brute_minimal_equality_words(const BinaryMorphism& g, const BinaryMorphism& h, std::size_t n) {
  std::vector<Word> out;
  for (const Word& w : all_words_up_to(n)) {
    if (!(g.apply(w) == h.apply(w))) continue;
    bool minimal = true;
    for (std::size_t k = 1; k < w.size() && minimal; ++k) {
      minimal = !(g.apply(w.prefix(k)) == h.apply(w.prefix(k)));
    }
    if (minimal) out.push_back(w);
  }
  return out;
}

// psi∘g, psi∘h for the pair with E = {ab, ba}* (or its letter swap) and an
// injective psi; left composition keeps the equality set, so both
// generators are present.
std::pair<BinaryMorphism, BinaryMorphism> rank_two_pair(const FuzzConfig& cfg, std::size_t trial) {
  auto rng = trial_rng(cfg.seed, trial, 44);
  const Alphabet target = target_alphabet(cfg);
  BinaryMorphism g("aba", "b", Alphabet::binary());
  BinaryMorphism h("a", "bab", Alphabet::binary());
  if (uniform(rng, 0, 1)) {
    g = swap_letters(g);
    h = swap_letters(h);
  }
  const std::size_t budget = std::max<std::size_t>(cfg.max_image_len, 3);
  while (true) {
    const std::size_t la = uniform(rng, 1, 2);
    const std::size_t lb = uniform(rng, 1, 2);
    if (2 * la + lb > budget || la + 2 * lb > budget) continue;
    const BinaryMorphism psi(random_word(rng, target, la, la), random_word(rng, target, lb, lb));
    if (is_periodic(psi)) continue;
    return {BinaryMorphism(psi.apply(g.image_a()), psi.apply(g.image_b())),
            BinaryMorphism(psi.apply(h.image_a()), psi.apply(h.image_b()))};
  }
}

void check_generator_pair(const FuzzConfig& cfg, const BinaryMorphism& g, const BinaryMorphism& h, std::size_t trial,
                         FuzzVerdict& v) {
  const std::string witness = describe_pair(g, h);

  EqualityReport report;
  try {
    report = classify(g, h, cfg.limits);
  } catch (const InvariantViolation& e) {
    v.fail("generators.rank", trial, witness + ": " + e.what());
    return;
  }
  const EqualitySearch& s = *report.search;
  const std::vector<Word>& words = s.words;
  v.check("generators.rank", words.size() <= 2, trial, witness + " " + join(words));

  const auto* np = std::get_if<BothNonPeriodic>(&report.variant);
  v.check("generators.classification", np && np->generators == words, trial, witness);
  if (np && np->complete) v.pass("search.complete");
  else v.skip("search.complete");

  if (words.size() >= 2) {
    bool firsts = true;
    bool lasts = true;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        firsts = firsts && words[i].first() != words[j].first();
        lasts = lasts && words[i].last() != words[j].last();
      }
    }
    v.check("generators.distinct_first_letters", firsts, trial, witness + " " + join(words));
    v.check("generators.distinct_last_letters", lasts, trial, witness + " " + join(words));
    v.check("generators.two_word_shape", two_word_shape(words).has_value(), trial, witness + " " + join(words));

    const bool g_marked = is_marked(g);
    const bool h_marked = is_marked(h);
    if (g_marked || h_marked) {
      const BinaryMorphism& marked = g_marked ? g : h;
      const BinaryMorphism& other = g_marked ? h : g;
      const Word z = z_prefix(other);
      bool ok = true;
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
          const Word m = longest_common_prefix(words[i], words[j]);
          ok = ok && marked.apply(m) == other.apply(m) + z;
        }
      }
      v.check("generators.meet_offset", ok, trial, witness + " " + join(words));
    }
  }
  if (!words.empty()) {
    v.check("generators.verified", verify_generators(g, h, words).ok(), trial, witness + " " + join(words));
    bool closed = true;
    for (const Word& x : words) {
      for (const Word& y : words) closed = closed && is_equality_word(g, h, x + y);
    }
    v.check("generators.closure", closed, trial, witness);
  }

  // Independent oracle: brute-force membership on short words.
  if (s.limit_hit != "max_states") {
    std::vector<Word> short_found;
    for (const Word& w : words) {
      if (w.size() <= 8) short_found.push_back(w);
    }
    v.check("search.brute_force", brute_minimal_equality_words(g, h, 8) == short_found, trial, witness);
  } else {
    v.skip("search.brute_force");
  }
}

// Every trial draws a uniform non-periodic pair; every fourth also checks a
// pair known to have two generators.
void run_generators_trial(const FuzzConfig& cfg, std::size_t trial, FuzzVerdict& v) {
  const auto [g, h] = trial == 0 ? std::pair{pinned_g(), pinned_h()}
                                 : random_morphism_pair(cfg, trial, PairFilter::kNonPeriodic);
  check_generator_pair(cfg, g, h, trial, v);
  if (trial % 4 == 3) {
    const auto [rg, rh] = rank_two_pair(cfg, trial);
    check_generator_pair(cfg, rg, rh, trial, v);
  }
}

// -------------------------------------------------------------- periodic

void run_periodic_trial(const FuzzConfig& cfg, std::size_t trial, FuzzVerdict& v) {
  constexpr std::size_t kBrute = 10;
  {
    const auto [g, h] = random_morphism_pair(cfg, trial, PairFilter::kBothPeriodic);
    const EqualityReport report = classify(g, h, cfg.limits);
    const auto* bp = std::get_if<BothPeriodic>(&report.variant);
    bool agree = bp != nullptr;
    for (const Word& w : all_words_up_to(kBrute)) {
      if (!agree) break;
      const bool member = g.apply(w) == h.apply(w);
      const bool predicted = bp->kind == BothPeriodic::Kind::kRatioLocked && ratio(w) == *bp->k;
      agree = member == predicted;
    }
    v.check("periodic.both", agree, trial, describe_pair(g, h));
  }
  {
    const auto [g, h] = random_morphism_pair(cfg, trial, PairFilter::kOnePeriodic);
    const std::string witness = describe_pair(g, h);
    EqualityReport report;
    try {
      report = classify(g, h, cfg.limits);
    } catch (const InvariantViolation& e) {
      v.fail("periodic.one", trial, witness + ": " + e.what());
      return;
    }
    const auto* op = std::get_if<OnePeriodic>(&report.variant);
    bool ok = op != nullptr;
    for (const Word& w : all_words_up_to(kBrute)) {
      if (!ok) break;
      if (!(g.apply(w) == h.apply(w))) continue;
      ok = op->alpha && !op->alpha->empty() && w.size() % op->alpha->size() == 0 &&
           power(*op->alpha, w.size() / op->alpha->size()) == w;
    }
    v.check("periodic.one", ok, trial, witness);
  }
}

// --------------------------------------------------------------- testset

std::vector<Word> random_language(std::mt19937_64& rng) {
  std::vector<Word> words(uniform(rng, 1, 6));
  if (uniform(rng, 0, 1)) {
    for (Word& w : words) w = random_word(rng, Alphabet::binary(), 1, 8);
    return words;
  }
  // Same-ratio language: blocks of p a's and q b's, shuffled.
  std::size_t p = uniform(rng, 0, 3);
  std::size_t q = uniform(rng, p == 0 ? 1 : 0, 3);
  for (Word& w : words) {
    const std::size_t copies = uniform(rng, 1, std::max<std::size_t>(1, 8 / (p + q)));
    std::string s;
    for (std::size_t c = 0; c < copies; ++c) {
      std::string piece = std::string(p, 'a') + std::string(q, 'b');
      std::shuffle(piece.begin(), piece.end(), rng);
      s += piece;
    }
    w = Word(s);
  }
  return words;
}

std::pair<BinaryMorphism, BinaryMorphism> agreement_candidate(std::mt19937_64& rng, const std::vector<Word>& lang) {
  const std::size_t kind = uniform(rng, 0, 2);
  if (kind == 0) {
    const Ratio r = ratio(lang[uniform(rng, 0, lang.size() - 1)]);
    const std::size_t p = r.is_infinite() ? 1 : r.num();
    const std::size_t q = r.is_infinite() ? 0 : r.den();
    const Word root = random_word(rng, Alphabet::binary(), 1, 2);
    const std::size_t s = uniform(rng, 1, 2);
    const std::size_t ha = uniform(rng, 0, 2);
    const std::size_t gb = uniform(rng, 0, 2);
    return {BinaryMorphism(power(root, ha + q * s), power(root, gb)),
            BinaryMorphism(power(root, ha), power(root, gb + p * s))};
  }
  if (kind == 1) {
    return {BinaryMorphism("aba", "b", Alphabet::binary()), BinaryMorphism("a", "bab", Alphabet::binary())};
  }
  return {random_morphism(rng, Alphabet::binary(), 3), random_morphism(rng, Alphabet::binary(), 3)};
}

void run_testset_trial(const FuzzConfig& cfg, std::size_t trial, FuzzVerdict& v) {
  auto rng = trial_rng(cfg.seed, trial, 66);
  const std::vector<Word> lang = random_language(rng);
  const std::string witness = join(lang);

  const TestSetReport report = test_set(lang);
  const bool subset = std::all_of(report.test_set.begin(), report.test_set.end(), [&](const Word& t) {
    return std::find(lang.begin(), lang.end(), t) != lang.end();
  });
  v.check("testset.size", report.test_set.size() <= 2 && !report.test_set.empty() && subset, trial, witness);

  const std::vector<Word> rp_t = rp(report.test_set);
  v.check("testset.covers_t_rp", std::all_of(report.t_rp.begin(), report.t_rp.end(), [&](const Word& w) {
            return std::find(rp_t.begin(), rp_t.end(), w) != rp_t.end();
          }),
          trial, witness);

  const TestSetCheck check = check_test_set(report.test_set, lang, 200, cfg.seed ^ (trial * 0x9E3779B97F4A7C15ULL));
  v.check("testset.implication", check.ok(), trial,
          witness + " T=" + join(report.test_set) +
              (check.counterexample ? " " + describe_pair(check.counterexample->first, check.counterexample->second) : ""));

  const std::vector<Word> rps = rp(lang);
  bool fixpoint = true;
  for (const Word& w : rps) {
    const auto f = ratio_primitive_factorization(w);
    fixpoint = fixpoint && is_ratio_primitive(w) && f.size() == 1 && f.front() == w;
  }
  for (const Word& w : lang) {
    Word joined = Word::empty(Alphabet::binary());
    for (const Word& f : ratio_primitive_factorization(w)) joined += f;
    fixpoint = fixpoint && joined == w;
  }
  v.check("rp.fixpoint", fixpoint, trial, witness);

  bool reduction = true;
  bool different = true;
  for (int i = 0; i < 20; ++i) {
    const auto [g, h] = agreement_candidate(rng, lang);
    reduction = reduction && agree_on(g, h, lang) == agree_on(g, h, rps);
    for (const Word& x : lang) {
      for (const Word& y : lang) {
        if (!(ratio(x) == ratio(y)) && agree_on(g, h, {x, y})) different = different && g == h;
      }
    }
  }
  v.check("testset.rp_reduction", reduction, trial, witness);
  v.check("testset.different_ratios", different, trial, witness);
}

}  // namespace

std::pair<BinaryMorphism, BinaryMorphism> random_morphism_pair(const FuzzConfig& cfg, std::size_t trial,
                                                               PairFilter filter) {
  auto rng = trial_rng(cfg.seed, trial, 100 + static_cast<std::uint32_t>(filter));
  const Alphabet target = target_alphabet(cfg);
  const std::size_t len = cfg.max_image_len;
  while (true) {
    switch (filter) {
      case PairFilter::kAny:
        return {random_morphism(rng, target, len), random_morphism(rng, target, len)};
      case PairFilter::kNonPeriodic:
      case PairFilter::kBothMarked: {
        BinaryMorphism g = random_morphism(rng, target, len);
        BinaryMorphism h = random_morphism(rng, target, len);
        const bool ok = filter == PairFilter::kNonPeriodic ? !is_periodic(g) && !is_periodic(h)
                                                           : is_marked(g) && is_marked(h);
        if (ok && !(g == h)) return {std::move(g), std::move(h)};
        break;
      }
      case PairFilter::kPrincipalMarked: {
        BinaryMorphism g = random_morphism(rng, target, len);
        BinaryMorphism h = random_morphism(rng, target, len);
        if (is_periodic(g) || is_periodic(h) || g == h) break;
        Principalized p = principalize(g, h);
        if (is_marked(p.g) || is_marked(p.h)) return {std::move(p.g), std::move(p.h)};
        break;
      }
      case PairFilter::kBothPeriodic: {
        const Word tg = primitive_root(random_word(rng, target, 1, 2)).root;
        const Word th = uniform(rng, 0, 1) ? tg : primitive_root(random_word(rng, target, 1, 2)).root;
        BinaryMorphism g = random_periodic(rng, tg, len, true);
        BinaryMorphism h = random_periodic(rng, th, len, true);
        if (!(g == h)) return {std::move(g), std::move(h)};
        break;
      }
      case PairFilter::kOnePeriodic: {
        const Word t = primitive_root(random_word(rng, target, 1, 3)).root;
        BinaryMorphism p = random_periodic(rng, t, len, uniform(rng, 0, 4) == 0);
        BinaryMorphism n = random_morphism(rng, target, len);
        if (is_periodic(n)) break;
        if (uniform(rng, 0, 1)) return {std::move(p), std::move(n)};
        return {std::move(n), std::move(p)};
      }
    }
  }
}

FuzzVerdict run_suite(Suite suite, const FuzzConfig& cfg, std::size_t first, std::size_t last) {
  cfg.validate();
  FuzzVerdict verdict;
  for (std::size_t trial = first; trial < last; ++trial) {
    try {
      switch (suite) {
        case Suite::kWords: run_words_trial(cfg, trial, verdict); break;
        case Suite::kHull: run_hull_trial(cfg, trial, verdict); break;
        case Suite::kBlocks: run_blocks_trial(cfg, trial, verdict); break;
        case Suite::kGenerators: run_generators_trial(cfg, trial, verdict); break;
        case Suite::kPeriodic: run_periodic_trial(cfg, trial, verdict); break;
        case Suite::kTestSet: run_testset_trial(cfg, trial, verdict); break;
      }
    } catch (const std::exception& e) {
      verdict.fail(std::string(to_string(suite)) + ".exception", trial, e.what());
    }
  }
  return verdict;
}

FuzzVerdict run_fuzz(const FuzzConfig& cfg) {
  cfg.validate();
  std::size_t workers = cfg.workers ? cfg.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, cfg.trials);

  FuzzVerdict total;
  for (Suite suite : cfg.suites) {
    std::vector<FuzzVerdict> parts(workers);
    std::vector<std::thread> threads;
    const std::size_t chunk = (cfg.trials + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = std::min(cfg.trials, w * chunk);
      const std::size_t last = std::min(cfg.trials, first + chunk);
      threads.emplace_back([&, w, first, last] { parts[w] = run_suite(suite, cfg, first, last); });
    }
    for (auto& t : threads) t.join();
    for (const FuzzVerdict& part : parts) total.merge(part);
  }
  return total;
}

}  // namespace morpheq
