// Runs the nine acceptance criteria at their stated sizes and time limits and
// prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "morpheq/coincidence.hpp"
#include "morpheq/equality.hpp"
#include "morpheq/fuzz.hpp"

using namespace morpheq;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_ms;
  std::function<Outcome()> run;
};

BinaryMorphism M(std::string_view a, std::string_view b) { return BinaryMorphism(a, b, Alphabet::binary()); }
Word W(std::string_view s) { return Word(s); }

Outcome pinned_identities() {
  const BinaryMorphism g = M("aabb", "b");
  const BinaryMorphism h = M("a", "bb");
  const bool first = g.apply("aabb") == W("aabbaabbbb") && h.apply("aabaabb") == W("aabbaabbbb");
  const bool second = g.apply("abb") == W("aabbbb") && h.apply("aabb") == W("aabbbb");
  return {first && second, "g(a²b²)=h(a²ba²bb)=a²b²a²b⁴, g(ab²)=h(a²b²)=a²b⁴"};
}

Outcome marked_version_example() {
  const BinaryMorphism h = M("a", "aab");
  const Word z = z_prefix(h);
  const BinaryMorphism sharp = marked_version(h);
  bool ok = z == W("aa") && sharp == M("a", "baa");
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100 && ok; ++i) {
    std::string w(rng() % 16, 'a');
    for (char& c : w) c = rng() % 2 ? 'b' : 'a';
    ok = z + sharp.apply(w) == h.apply(w) + z;
  }
  return {ok, "z=" + z.str() + ", marked=(a→" + sharp.image_a().str() + ", b→" + sharp.image_b().str() +
                  "), conjugation identity on 100 random words"};
}

Outcome pinned_blocks() {
  const BinaryMorphism g = M("aabb", "b");
  const BinaryMorphism h = M("a", "bb");
  const BlockSet bs = compute_blocks(g, h);
  const std::vector<Block> expected{{W("a"), W("aab")}, {W("bb"), W("b")}};
  const bool blocks_ok = bs.blocks() == expected;
  const bool oracle_ok = enumerate_coincidence_pairs(g, h, 8) == expected;
  bool marked = false;
  if (bs.count() == 2) {
    const SuccessorPair s = successor_morphisms(bs);
    marked = is_marked(s.g1) && is_marked(s.h1);
  }
  return {blocks_ok && oracle_ok && marked, std::string("blocks {(a,aab),(bb,b)}: ") + (blocks_ok ? "yes" : "no") +
                                                ", enumerator@8 agrees: " + (oracle_ok ? "yes" : "no") +
                                                ", successors marked: " + (marked ? "yes" : "no")};
}

Outcome swapped_pair_equality() {
  const BinaryMorphism g = M("aba", "b");
  const BinaryMorphism h = M("a", "bab");
  const EqualityReport r = classify(g, h, SearchLimits{});
  const auto* np = std::get_if<BothNonPeriodic>(&r.variant);
  if (!np) return {false, "not classified as both non-periodic"};
  const GeneratorVerification v = verify_generators(g, h, np->generators);
  const bool ok = np->generators == std::vector<Word>{W("ab"), W("ba")} && np->complete && v.ok() &&
                  v.two_word_shape == std::optional<std::size_t>(1);
  std::string gens;
  for (const Word& w : np->generators) gens += (gens.empty() ? "" : ",") + w.str();
  return {ok, "generators {" + gens + "}, complete=" + (np->complete ? "true" : "false") +
                  ", verification " + (v.ok() ? "ok" : "failed") + ", shape i=" +
                  (v.two_word_shape ? std::to_string(*v.two_word_shape) : "none")};
}

Outcome suite_run(Suite suite, std::size_t trials, const std::vector<std::string>& required) {
  FuzzConfig cfg;
  cfg.seed = 20240601;
  cfg.trials = trials;
  cfg.max_image_len = 5;
  cfg.limits = SearchLimits{40, 128, 1'000'000};
  cfg.suites = {suite};
  const FuzzVerdict v = run_fuzz(cfg);
  Outcome out;
  out.ok = v.ok();
  std::string summary;
  for (const std::string& name : required) {
    const auto it = v.invariants.find(name);
    if (it == v.invariants.end() || it->second.checked == 0) {
      out.ok = false;
      summary += " " + name + "=never-checked";
      continue;
    }
    summary += " " + name + "=" + std::to_string(it->second.passed) + "/" + std::to_string(it->second.checked);
    if (it->second.skipped) summary += "(skipped " + std::to_string(it->second.skipped) + ")";
  }
  std::size_t failures = 0;
  for (const auto& [name, t] : v.invariants) {
    failures += t.failed;
    if (t.failed && !t.failures.empty()) {
      summary += " FAILED " + name + " trial " + std::to_string(t.failures.front().trial) + ": " +
                 t.failures.front().witness;
    }
  }
  out.detail = std::to_string(trials) + " trials, " + std::to_string(failures) + " violations;" + summary;
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "pinned identities", 1, pinned_identities},
      {2, "z-prefix and marked version", 1, marked_version_example},
      {3, "blocks of the pinned pair", 10, pinned_blocks},
      {4, "equality set {ab, ba}", 10, swapped_pair_equality},
      {5, "minimal equality words fuzz", 60'000,
       [] {
         return suite_run(Suite::kGenerators, 10'000,
                          {"generators.distinct_first_letters", "generators.distinct_last_letters",
                           "generators.rank", "search.brute_force"});
       }},
      {6, "blocks fuzz", 60'000,
       [] {
         return suite_run(Suite::kBlocks, 10'000,
                          {"blocks.rank", "blocks.first_letters", "blocks.unique_factorization", "blocks.bifix"});
       }},
      {7, "periodic classification", 60'000,
       [] { return suite_run(Suite::kPeriodic, 1'000, {"periodic.both", "periodic.one"}); }},
      {8, "test sets", 120'000,
       [] {
         return suite_run(Suite::kTestSet, 1'000,
                          {"testset.size", "testset.implication", "rp.fixpoint", "testset.rp_reduction"});
       }},
      {9, "free hull self-validation", 30'000,
       [] {
         return suite_run(Suite::kHull, 1'000,
                          {"hull.code", "hull.factorize", "hull.prefix_suffix", "hull.letters", "hull.idempotent"});
       }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms < c.limit_ms;
    const bool pass = out.ok && in_time;
    if (!pass) ++failed;
    std::printf("[%s] criterion %d (%s): %.3f ms (limit %.0f ms%s) | %s\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), ms, c.limit_ms, in_time ? "" : ", EXCEEDED", out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
