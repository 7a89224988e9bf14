#include "morpheq/equality.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "morpheq/overflow.hpp"

namespace morpheq {

void SearchLimits::validate() const {
  if (max_word_len == 0 || max_overflow_len == 0 || max_states == 0) {
    throw InputError(InputErrorKind::kInvalidConfig, "search limits must be positive");
  }
}

RatioConstraint ratio_constraint(const BinaryMorphism& g, const BinaryMorphism& h) {
  // |w|_a·da = |w|_b·db for every equality word w.
  const auto da = static_cast<long long>(g.image_a().size()) - static_cast<long long>(h.image_a().size());
  const auto db = static_cast<long long>(h.image_b().size()) - static_cast<long long>(g.image_b().size());
  using Kind = RatioConstraint::Kind;
  if (da == 0 && db == 0) return {Kind::kUnconstrained, std::nullopt};
  if (da == 0) return {Kind::kFixed, Ratio::infinity()};
  if (db == 0) return {Kind::kFixed, Ratio(0, 1)};
  if ((da > 0) != (db > 0)) return {Kind::kImpossible, std::nullopt};
  return {Kind::kFixed, Ratio(static_cast<std::uint64_t>(std::llabs(db)), static_cast<std::uint64_t>(std::llabs(da)))};
}

bool is_equality_word(const BinaryMorphism& g, const BinaryMorphism& h, const Word& w) {
  return g.apply(w) == h.apply(w);
}

namespace {

bool is_minimal_equality_word(const BinaryMorphism& g, const BinaryMorphism& h, const Word& w) {
  if (w.empty() || !is_equality_word(g, h, w)) return false;
  for (std::size_t n = 1; n < w.size(); ++n) {
    if (is_equality_word(g, h, w.prefix(n))) return false;
  }
  return true;
}

enum class Prune { kKeep, kNever, kTooLong };

// Can a word with these letter counts still be extended to one of ratio p/q
// within max_len letters?
Prune ratio_prune(const RatioConstraint& rc, std::size_t a_count, std::size_t b_count, std::size_t max_len) {
  if (rc.kind != RatioConstraint::Kind::kFixed) return Prune::kKeep;
  const Ratio& r = *rc.ratio;
  const std::uint64_t p = r.is_infinite() ? 1 : r.num();
  const std::uint64_t q = r.is_infinite() ? 0 : r.den();
  if ((p == 0 && a_count > 0) || (q == 0 && b_count > 0)) return Prune::kNever;
  std::uint64_t m = 1;
  if (p > 0) m = std::max<std::uint64_t>(m, (a_count + p - 1) / p);
  if (q > 0) m = std::max<std::uint64_t>(m, (b_count + q - 1) / q);
  return m * (p + q) <= max_len ? Prune::kKeep : Prune::kTooLong;
}

struct Node {
  Overflow state;
  std::string word;
  std::size_t a_count = 0;
  std::size_t b_count = 0;
};

struct Edge {
  std::size_t from;
  char letter;
  std::size_t to;
};

constexpr std::array<char, 2> kLetters{'a', 'b'};

}  // namespace

EqualitySearch minimal_equality_words(const BinaryMorphism& g, const BinaryMorphism& h,
                                      const SearchLimits& limits) {
  limits.validate();
  require_same_target(g, h);
  EqualitySearch result;
  const RatioConstraint rc = ratio_constraint(g, h);
  if (rc.kind == RatioConstraint::Kind::kImpossible) {
    result.exhausted = true;
    return result;
  }

  std::vector<Node> nodes{{Overflow::balanced(g.target()), "", 0, 0}};
  std::unordered_map<Overflow, std::size_t, OverflowHash> index;
  std::vector<Edge> edges;   // between nodes, tree edges and merges alike
  std::vector<Edge> merges;  // edges into an already-known state
  std::vector<std::pair<std::size_t, char>> emissions;
  auto note_limit = [&](std::string_view what) {
    if (result.limit_hit.empty()) result.limit_hit = what;
  };

  std::deque<std::size_t> queue{0};
  bool stopped = false;
  while (!queue.empty() && !stopped) {
    const std::size_t id = queue.front();
    queue.pop_front();
    for (char x : kLetters) {
      auto next = overflow_advance(nodes[id].state, g.image(x), h.image(x));
      if (!next) continue;
      if (nodes[id].word.size() >= limits.max_word_len) {
        note_limit("max_word_len");
        continue;
      }
      if (next->is_balanced()) {
        emissions.emplace_back(id, x);
        continue;
      }
      const std::size_t a_count = nodes[id].a_count + (x == 'a');
      const std::size_t b_count = nodes[id].b_count + (x == 'b');
      const Prune prune = ratio_prune(rc, a_count, b_count, limits.max_word_len);
      if (prune == Prune::kNever) continue;
      if (prune == Prune::kTooLong) {
        note_limit("max_word_len");
        continue;
      }
      if (next->excess().size() > limits.max_overflow_len) {
        note_limit("max_overflow_len");
        continue;
      }
      if (auto it = index.find(*next); it != index.end()) {
        merges.push_back({id, x, it->second});
        edges.push_back(merges.back());
        continue;
      }
      if (nodes.size() >= limits.max_states) {
        note_limit("max_states");
        stopped = true;
        break;
      }
      const std::size_t child = nodes.size();
      nodes.push_back({*next, nodes[id].word + x, a_count, b_count});
      index.emplace(std::move(*next), child);
      edges.push_back({id, x, child});
      queue.push_back(child);
    }
  }
  result.states = nodes.size();
  result.exhausted = result.limit_hit.empty();

  // Shortest suffix leading from each node to balance, by backward BFS.
  std::vector<std::optional<std::string>> to_balance(nodes.size());
  std::vector<std::vector<std::pair<std::size_t, char>>> incoming(nodes.size());
  for (const Edge& e : edges) incoming[e.to].emplace_back(e.from, e.letter);
  std::deque<std::size_t> back;
  for (auto [id, x] : emissions) {
    if (!to_balance[id]) {
      to_balance[id] = std::string(1, x);
      back.push_back(id);
    }
  }
  while (!back.empty()) {
    const std::size_t id = back.front();
    back.pop_front();
    for (auto [from, x] : incoming[id]) {
      if (!to_balance[from]) {
        to_balance[from] = x + *to_balance[id];
        back.push_back(from);
      }
    }
  }

  std::set<std::string> found;
  for (auto [id, x] : emissions) found.insert(nodes[id].word + x);
  for (const Edge& m : merges) {
    if (to_balance[m.to]) found.insert(nodes[m.from].word + m.letter + *to_balance[m.to]);
  }
  for (const std::string& s : found) {
    Word w(s);
    if (!is_minimal_equality_word(g, h, w)) {
      throw InvariantViolation("search produced " + s + ", which is not a minimal equality word");
    }
    result.words.push_back(std::move(w));
  }
  result.words = shortlex_sorted_unique(std::move(result.words));
  return result;
}

namespace {

std::optional<Word> root_of(const BinaryMorphism& m) {
  if (!m.image_a().empty()) return primitive_root(m.image_a()).root;
  if (!m.image_b().empty()) return primitive_root(m.image_b()).root;
  return std::nullopt;
}

BothPeriodic classify_both_periodic(const BinaryMorphism& g, const BinaryMorphism& h) {
  using Kind = BothPeriodic::Kind;
  const auto rg = root_of(g);
  const auto rh = root_of(h);
  if (!rg || !rh || *rg == *rh) {
    // Images are powers of one word, so equality reduces to equal lengths.
    const RatioConstraint rc = ratio_constraint(g, h);
    switch (rc.kind) {
      case RatioConstraint::Kind::kFixed: return {Kind::kRatioLocked, rc.ratio};
      case RatioConstraint::Kind::kImpossible: return {Kind::kTrivial, std::nullopt};
      case RatioConstraint::Kind::kUnconstrained:
        throw InvariantViolation("periodic morphisms with one root and equal lengths differ");
    }
  }
  // Distinct roots: only letters erased by both morphisms survive.
  const bool a_free = g.image_a().empty() && h.image_a().empty();
  const bool b_free = g.image_b().empty() && h.image_b().empty();
  if (a_free) return {Kind::kRatioLocked, Ratio::infinity()};
  if (b_free) return {Kind::kRatioLocked, Ratio(0, 1)};
  return {Kind::kTrivial, std::nullopt};
}

std::string search_summary(const EqualitySearch& s) {
  if (s.exhausted) return "exhausted " + std::to_string(s.states) + " reachable overflow states";
  return "stopped by " + s.limit_hit + " after " + std::to_string(s.states) + " overflow states";
}

}  // namespace

EqualityReport classify(const BinaryMorphism& g, const BinaryMorphism& h, const SearchLimits& limits) {
  limits.validate();
  require_same_target(g, h);
  if (g == h) return {IdenticalMorphisms{}, std::nullopt};

  const bool pg = is_periodic(g);
  const bool ph = is_periodic(h);
  if (pg && ph) return {classify_both_periodic(g, h), std::nullopt};

  EqualitySearch search = minimal_equality_words(g, h, limits);
  if (pg != ph) {
    OnePeriodic out;
    if (search.words.size() > 1) {
      throw InvariantViolation("one-periodic pair with " + std::to_string(search.words.size()) +
                               " minimal equality words");
    }
    if (search.words.size() == 1) {
      out.alpha = search.words.front();
      out.complete = true;
      out.certificate = "rank-saturated: a one-periodic pair has at most one generator; " + search_summary(search);
    } else if (search.exhausted) {
      out.alpha = Word();
      out.complete = true;
      out.certificate = "empty: " + search_summary(search);
    } else {
      out.certificate = "not found within bounds: " + search_summary(search);
    }
    return {std::move(out), std::move(search)};
  }

  BothNonPeriodic out;
  out.generators = search.words;
  if (out.generators.size() > 2) {
    throw InvariantViolation("non-periodic pair with " + std::to_string(out.generators.size()) +
                             " minimal equality words");
  }
  if (out.generators.size() == 2) {
    out.complete = true;
    out.certificate = "rank-saturated: two generators found; " + search_summary(search);
  } else {
    out.complete = search.exhausted;
    out.certificate = search_summary(search);
  }
  return {std::move(out), std::move(search)};
}

std::optional<std::size_t> two_word_shape(const std::vector<Word>& words) {
  const std::vector<Word> set = shortlex_sorted_unique(words);
  if (set.size() != 2 || set[0].size() != set[1].size() || set[0].size() < 2) return std::nullopt;
  const std::size_t i = set[0].size() - 1;
  for (auto [p, q] : {std::pair{'a', 'b'}, std::pair{'b', 'a'}}) {
    const std::string run(i, p);
    const std::set<std::string> expected{run + q, q + run};
    if (std::set<std::string>{set[0].str(), set[1].str()} == expected) return i;
  }
  return std::nullopt;
}

GeneratorVerification verify_generators(const BinaryMorphism& g, const BinaryMorphism& h,
                                        const std::vector<Word>& generators) {
  GeneratorVerification out;
  out.generators = shortlex_sorted_unique(generators);
  for (const Word& w : out.generators) {
    if (w.empty()) {
      out.failures.push_back("empty generator");
      continue;
    }
    if (!is_equality_word(g, h, w)) {
      out.failures.push_back("not an equality word: " + w.str());
      continue;
    }
    for (std::size_t n = 1; n < w.size(); ++n) {
      if (is_equality_word(g, h, w.prefix(n))) {
        out.failures.push_back("not minimal: " + w.str() + " has equality prefix " + w.prefix(n).str());
        break;
      }
    }
  }
  if (out.generators.size() == 2) {
    const Word& x = out.generators[0];
    const Word& y = out.generators[1];
    if (!x.empty() && !y.empty()) {
      if (x.first() == y.first()) out.failures.push_back("same first letter: " + x.str() + ", " + y.str());
      if (x.last() == y.last()) out.failures.push_back("same last letter: " + x.str() + ", " + y.str());
      if (x.comparable_with(y) || x.is_suffix_of(y) || y.is_suffix_of(x)) {
        out.failures.push_back("not a bifix code: " + x.str() + ", " + y.str());
      }
    }
    out.two_word_shape = two_word_shape(out.generators);
    if (!out.two_word_shape && !(g == h) && !is_periodic(g) && !is_periodic(h)) {
      out.failures.push_back("two generators not of the form {a^i b, b a^i}: " + x.str() + ", " + y.str());
    }
  }
  return out;
}

}  // namespace morpheq
