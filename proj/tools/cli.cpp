#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "morpheq/coincidence.hpp"
#include "morpheq/equality.hpp"
#include "morpheq/free_hull.hpp"
#include "morpheq/fuzz.hpp"
#include "morpheq/testset.hpp"

namespace morpheq::cli {

namespace {

using nlohmann::ordered_json;
using json = ordered_json;

struct MalformedJson : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream f(file);
  if (!f) throw InputError(InputErrorKind::kMalformedInput, "cannot open " + file);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedJson(e.what());
  }
}

std::string get_string(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
    throw InputError(InputErrorKind::kMalformedInput, std::string("expected string field \"") + key + "\"");
  }
  return j.at(key).get<std::string>();
}

json morphism_json(const BinaryMorphism& m) {
  return {{"a", m.image_a().str()}, {"b", m.image_b().str()}, {"alphabet", m.target().letters()}};
}

json words_json(const std::vector<Word>& words) {
  json out = json::array();
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

json block_json(const Block& b) { return {{"e", b.e.str()}, {"f", b.f.str()}}; }

std::string_view lead_name(Lead lead) {
  switch (lead) {
    case Lead::kBalanced: return "balanced";
    case Lead::kGAhead: return "g-ahead";
    case Lead::kHAhead: return "h-ahead";
  }
  return "unknown";
}

json overflow_json(const Overflow& o) { return {{"side", lead_name(o.side())}, {"excess", o.excess().str()}}; }

struct PairInput {
  BinaryMorphism g;
  BinaryMorphism h;
};

// {"g": {"a": .., "b": .., "alphabet"?}, "h": {...}}. Without an explicit
// alphabet the target is the sorted union of letters of all four images.
PairInput parse_pair(const json& j) {
  if (!j.is_object() || !j.contains("g") || !j.contains("h")) {
    throw InputError(InputErrorKind::kMalformedInput, "expected an object with fields \"g\" and \"h\"");
  }
  const json& g = j.at("g");
  const json& h = j.at("h");
  std::string letters;
  for (const json* m : {&g, &h}) {
    if (m->is_object() && m->contains("alphabet")) {
      const std::string given = get_string(*m, "alphabet");
      if (!letters.empty() && given != letters) {
        throw InputError(InputErrorKind::kAlphabetMismatch, "g and h declare different alphabets");
      }
      letters = given;
    }
  }
  const std::string ga = get_string(g, "a");
  const std::string gb = get_string(g, "b");
  const std::string ha = get_string(h, "a");
  const std::string hb = get_string(h, "b");
  const Alphabet alphabet = letters.empty() ? Alphabet::infer(ga + gb + ha + hb + "ab") : Alphabet(letters);
  return {BinaryMorphism(ga, gb, alphabet), BinaryMorphism(ha, hb, alphabet)};
}

std::vector<std::string> parse_word_list(const json& j) {
  const json& list = j.is_object() && j.contains("words") ? j.at("words") : j;
  if (!list.is_array()) throw InputError(InputErrorKind::kMalformedInput, "expected a JSON list of words");
  std::vector<std::string> out;
  for (const json& w : list) {
    if (!w.is_string()) throw InputError(InputErrorKind::kMalformedInput, "words must be strings");
    out.push_back(w.get<std::string>());
  }
  return out;
}

std::vector<Word> words_over(const std::vector<std::string>& texts, const Alphabet& alphabet) {
  std::vector<Word> out;
  for (const std::string& t : texts) out.emplace_back(t, alphabet);
  return out;
}

std::vector<Word> words_inferred(const std::vector<std::string>& texts) {
  std::string all;
  for (const std::string& t : texts) all += t;
  return words_over(texts, Alphabet::infer(all + "ab"));
}

json header() { return {{"schema", 1}}; }

json equality_json(const EqualityReport& report) {
  json out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IdenticalMorphisms>) {
          out["classification"] = "identical";
        } else if constexpr (std::is_same_v<T, BothPeriodic>) {
          out["classification"] = "both-periodic";
          out["kind"] = v.kind == BothPeriodic::Kind::kTrivial ? "trivial" : "ratio-locked";
          out["k"] = v.k ? json(v.k->to_string()) : json(nullptr);
          out["complete"] = true;
        } else if constexpr (std::is_same_v<T, OnePeriodic>) {
          out["classification"] = "one-periodic";
          out["alpha"] = v.alpha ? json(v.alpha->str()) : json(nullptr);
          out["complete"] = v.complete;
          out["certificate"] = v.certificate;
        } else {
          out["classification"] = "both-non-periodic";
          out["generators"] = words_json(v.generators);
          out["complete"] = v.complete;
          out["certificate"] = v.certificate;
        }
      },
      report.variant);
  if (report.search) {
    out["search"] = {{"states", report.search->states},
                     {"exhausted", report.search->exhausted},
                     {"limit_hit", report.search->limit_hit.empty() ? json(nullptr) : json(report.search->limit_hit)}};
  }
  return out;
}

// Blocks of a non-periodic pair after principalize -> marked_version.
struct BlockPipeline {
  BinaryMorphism g;
  BinaryMorphism h;
  bool transformed = false;
  BlockSet blocks;
};

BlockPipeline blocks_for(const BinaryMorphism& g, const BinaryMorphism& h) {
  if (is_marked(g) && is_marked(h)) return {g, h, false, compute_blocks(g, h)};
  const Principalized p = principalize(g, h);
  BinaryMorphism mg = marked_version(p.g);
  BinaryMorphism mh = marked_version(p.h);
  BlockSet blocks = compute_blocks(mg, mh);
  return {std::move(mg), std::move(mh), true, std::move(blocks)};
}

json blocks_json(const BlockPipeline& bp) {
  json out;
  if (bp.transformed) out["transformed"] = {{"g", morphism_json(bp.g)}, {"h", morphism_json(bp.h)}};
  json blocks = json::array();
  json cycles = json::array();
  for (char c : {'a', 'b'}) {
    const BlockSet::Entry& e = bp.blocks.entry(c);
    if (const Block* b = std::get_if<Block>(&e)) {
      blocks.push_back(block_json(*b));
    } else {
      const NoBlock& nb = std::get<NoBlock>(e);
      json trace = json::array();
      for (const Overflow& o : nb.trace) trace.push_back(overflow_json(o));
      cycles.push_back({{"letter", std::string(1, c)},
                        {"reason", nb.reason == NoBlock::Reason::kCycle ? "cycle" : "dead-end"},
                        {"state", overflow_json(nb.state)},
                        {"trace", trace}});
    }
  }
  out["blocks"] = blocks;
  out["cycles"] = cycles;
  if (bp.blocks.count() == 2) {
    const SuccessorPair s = successor_morphisms(bp.blocks);
    out["successors"] = {{"g1", morphism_json(s.g1)}, {"h1", morphism_json(s.h1)}};
  } else {
    out["successors"] = nullptr;
  }
  return out;
}

void write(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Options {
  std::string file;
  SearchLimits limits;
  bool timing = false;
  std::size_t max_len = 12;
  bool oracle = false;
  std::size_t check_pairs = 0;
  std::uint64_t seed = 0;
  FuzzConfig fuzz;
  std::vector<std::string> suites;
  std::string config_file;
  std::string witness_dir;
};

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out) {
  const PairInput p = parse_pair(parse_json(read_input(o.file, in)));
  json j = header();
  j["g"] = morphism_json(p.g);
  j["h"] = morphism_json(p.h);
  j["periodic"] = {{"g", is_periodic(p.g)}, {"h", is_periodic(p.h)}};
  j["marked"] = {{"g", is_marked(p.g)}, {"h", is_marked(p.h)}};
  json z;
  for (const auto& [name, m] : {std::pair{"g", &p.g}, std::pair{"h", &p.h}}) {
    if (is_periodic(*m)) z[name] = nullptr;
    else z[name] = {{"prefix", z_prefix(*m).str()}, {"suffix", z_suffix(*m).str()}};
  }
  j["z"] = z;
  std::vector<Word> images{p.g.image_a(), p.g.image_b(), p.h.image_a(), p.h.image_b()};
  std::erase_if(images, [](const Word& w) { return w.empty(); });
  j["hull_rank"] = free_hull(images).rank();
  if (!is_periodic(p.g) && !is_periodic(p.h)) j["blocks"] = blocks_json(blocks_for(p.g, p.h));
  j["equality"] = equality_json(classify(p.g, p.h, o.limits));
  write(out, j);
  return 0;
}

int cmd_blocks(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const PairInput p = parse_pair(parse_json(read_input(o.file, in)));
  require_non_erasing(p.g, "g");
  require_non_erasing(p.h, "h");
  if (is_periodic(p.g) || is_periodic(p.h)) {
    throw InputError(InputErrorKind::kPeriodicMorphism, "blocks need two non-periodic morphisms");
  }
  const BlockPipeline bp = blocks_for(p.g, p.h);
  json j = header();
  j.update(blocks_json(bp));
  if (o.oracle) {
    const std::vector<Block> enumerated = enumerate_coincidence_pairs(bp.g, bp.h, o.max_len);
    std::vector<Block> expected;
    for (const Block& b : bp.blocks.blocks()) {
      if (b.e.size() <= o.max_len && b.f.size() <= o.max_len) expected.push_back(b);
    }
    std::sort(expected.begin(), expected.end(), [](const Block& x, const Block& y) { return shortlex_less(x, y); });
    json pairs = json::array();
    for (const Block& b : enumerated) pairs.push_back(block_json(b));
    const bool agrees = enumerated == expected;
    j["oracle"] = {{"max_len", o.max_len}, {"pairs", pairs}, {"agrees", agrees}};
    if (!agrees) {
      write(out, j);
      err << "error: blocks disagree with the exhaustive enumerator\n";
      return 2;
    }
  }
  write(out, j);
  return 0;
}

int cmd_equality(const Options& o, std::istream& in, std::ostream& out) {
  const PairInput p = parse_pair(parse_json(read_input(o.file, in)));
  const auto start = std::chrono::steady_clock::now();
  const EqualityReport report = classify(p.g, p.h, o.limits);
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  json j = header();
  j["g"] = morphism_json(p.g);
  j["h"] = morphism_json(p.h);
  j.update(equality_json(report));
  if (const auto* np = std::get_if<BothNonPeriodic>(&report.variant); np && !np->generators.empty()) {
    const GeneratorVerification v = verify_generators(p.g, p.h, np->generators);
    j["verification"] = {{"ok", v.ok()},
                         {"failures", v.failures},
                         {"two_word_shape", v.two_word_shape ? json(*v.two_word_shape) : json(nullptr)}};
  }
  j["limits"] = {{"max_word_len", o.limits.max_word_len},
                 {"max_overflow_len", o.limits.max_overflow_len},
                 {"max_states", o.limits.max_states}};
  if (o.timing) j["timing_ms"] = elapsed.count();
  write(out, j);
  return 0;
}

int cmd_hull(const Options& o, std::istream& in, std::ostream& out) {
  const std::vector<Word> words = words_inferred(parse_word_list(parse_json(read_input(o.file, in))));
  const HullBasis hull = free_hull(words);
  json j = header();
  j["basis"] = words_json(hull.basis);
  j["rank"] = hull.rank();
  const CodeTest test = is_code(shortlex_sorted_unique(words));
  if (test.witness) {
    j["witness"] = {{"word", test.witness->word.str()},
                    {"first", words_json(test.witness->first)},
                    {"second", words_json(test.witness->second)}};
  }
  write(out, j);
  return 0;
}

int cmd_principalize(const Options& o, std::istream& in, std::ostream& out) {
  const PairInput p = parse_pair(parse_json(read_input(o.file, in)));
  const Principalized pr = principalize(p.g, p.h);
  json decode = json::object();
  for (char c : pr.recoding.fresh_alphabet().letters()) {
    decode[std::string(1, c)] = pr.recoding.decode_letter(c).str();
  }
  json j = header();
  j["g"] = morphism_json(pr.g);
  j["h"] = morphism_json(pr.h);
  j["decode"] = decode;
  j["marked"] = {{"g", is_marked(pr.g)}, {"h", is_marked(pr.h)}};
  write(out, j);
  return 0;
}

int cmd_testset(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::vector<Word> lang = words_over(parse_word_list(parse_json(read_input(o.file, in))), Alphabet::binary());
  const TestSetReport r = test_set(lang);
  json j = header();
  j["test_set"] = words_json(r.test_set);
  j["rp"] = words_json(r.rp_of_language);
  j["t_rp"] = words_json(r.t_rp);
  j["rule"] = to_string(r.rule);
  if (o.check_pairs > 0) {
    const TestSetCheck c = check_test_set(r.test_set, lang, o.check_pairs, o.seed);
    j["check"] = {{"pairs_checked", c.pairs_checked},
                  {"pairs_agreeing_on_t", c.pairs_agreeing_on_t},
                  {"counterexample", c.counterexample ? json({{"g", morphism_json(c.counterexample->first)},
                                                              {"h", morphism_json(c.counterexample->second)}})
                                                      : json(nullptr)}};
    if (!c.ok()) {
      write(out, j);
      err << "error: test set check found a counterexample\n";
      return 2;
    }
  }
  write(out, j);
  return 0;
}

int cmd_factorize(const Options& o, std::istream& in, std::ostream& out) {
  const std::vector<Word> words = words_over(parse_word_list(parse_json(read_input(o.file, in))), Alphabet::binary());
  json list = json::array();
  for (const Word& w : words) {
    list.push_back({{"word", w.str()}, {"ratio", ratio(w).to_string()}, {"factors", words_json(ratio_primitive_factorization(w))}});
  }
  json j = header();
  j["factorizations"] = list;
  write(out, j);
  return 0;
}

void apply_fuzz_config_file(const std::string& path, FuzzConfig& cfg) {
  std::ifstream f(path);
  if (!f) throw InputError(InputErrorKind::kInvalidConfig, "cannot open " + path);
  const json j = parse_json(std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()));
  if (!j.is_object()) throw InputError(InputErrorKind::kInvalidConfig, "fuzz config must be an object");
  try {
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<std::size_t>();
    if (j.contains("max_image_len")) cfg.max_image_len = j.at("max_image_len").get<std::size_t>();
    if (j.contains("target_alphabet_size")) cfg.target_alphabet_size = j.at("target_alphabet_size").get<std::size_t>();
    if (j.contains("limits")) {
      const json& l = j.at("limits");
      if (l.contains("max_word_len")) cfg.limits.max_word_len = l.at("max_word_len").get<std::size_t>();
      if (l.contains("max_overflow_len")) cfg.limits.max_overflow_len = l.at("max_overflow_len").get<std::size_t>();
      if (l.contains("max_states")) cfg.limits.max_states = l.at("max_states").get<std::size_t>();
    }
  } catch (const json::exception& e) {
    throw InputError(InputErrorKind::kInvalidConfig, e.what());
  }
}

int cmd_fuzz(Options o, std::ostream& out, std::ostream& err) {
  FuzzConfig cfg = o.fuzz;
  if (!o.config_file.empty()) apply_fuzz_config_file(o.config_file, cfg);
  if (const char* env = std::getenv("MORPHEQ_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(InputErrorKind::kInvalidConfig, "MORPHEQ_SEED is not an unsigned integer");
    }
  }
  if (!o.suites.empty()) {
    cfg.suites.clear();
    for (const std::string& name : o.suites) {
      const auto s = suite_from_string(name);
      if (!s) throw InputError(InputErrorKind::kInvalidConfig, "unknown suite " + name);
      cfg.suites.push_back(*s);
    }
  }
  cfg.validate();
  const FuzzVerdict verdict = run_fuzz(cfg);

  json suites = json::array();
  for (Suite s : cfg.suites) suites.push_back(to_string(s));
  json invariants = json::object();
  for (const auto& [name, t] : verdict.invariants) {
    json failures = json::array();
    for (const FuzzFailure& f : t.failures) failures.push_back({{"trial", f.trial}, {"witness", f.witness}});
    invariants[name] = {{"checked", t.checked},
                        {"passed", t.passed},
                        {"skipped", t.skipped},
                        {"failed", t.failed},
                        {"failures", failures}};
    if (!o.witness_dir.empty()) {
      std::filesystem::create_directories(o.witness_dir);
      for (const FuzzFailure& f : t.failures) {
        json record{{"schema", 1}, {"invariant", name}, {"seed", cfg.seed}, {"trial", f.trial}, {"witness", f.witness}};
        // Pair-based witnesses start with the pair as input JSON.
        std::istringstream leading(f.witness);
        json pair;
        try {
          leading >> pair;
          if (pair.is_object() && pair.contains("g")) record["pair"] = pair;
        } catch (const json::exception&) {
        }
        std::ofstream w(std::filesystem::path(o.witness_dir) / (name + "-" + std::to_string(f.trial) + ".json"));
        w << record.dump(2) << '\n';
      }
    }
  }
  json j = header();
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["max_image_len"] = cfg.max_image_len;
  j["target_alphabet_size"] = cfg.target_alphabet_size;
  j["suites"] = suites;
  j["ok"] = verdict.ok();
  j["invariants"] = invariants;
  write(out, j);
  if (!verdict.ok()) {
    err << "error: fuzz found invariant violations\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary morphisms, coincidence blocks and equality sets", "morpheq"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) { sub->add_option("-f,--file", o.file, "Read JSON input from a file (default stdin)"); };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-word-len", o.limits.max_word_len, "Longest word explored")->capture_default_str();
    sub->add_option("--max-overflow-len", o.limits.max_overflow_len, "Longest overflow kept")->capture_default_str();
    sub->add_option("--max-states", o.limits.max_states, "Overflow states explored")->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "One-shot report on a morphism pair");
  add_file(analyze);
  add_limits(analyze);

  CLI::App* blocks = app.add_subcommand("blocks", "Blocks of a pair of non-periodic morphisms");
  add_file(blocks);
  blocks->add_option("--max-len", o.max_len, "Bound for the --oracle enumerator")->capture_default_str();
  blocks->add_flag("--oracle", o.oracle, "Cross-check against the exhaustive enumerator");

  CLI::App* equality = app.add_subcommand("equality", "Classify the equality set of a pair");
  add_file(equality);
  add_limits(equality);
  equality->add_flag("--timing", o.timing, "Include the wall-clock time of the search");

  CLI::App* hull = app.add_subcommand("hull", "Free hull of a list of words");
  add_file(hull);

  CLI::App* principal = app.add_subcommand("principalize", "Recode a pair over the free hull of its images");
  add_file(principal);

  CLI::App* testset = app.add_subcommand("testset", "Test set of a finite language over {a,b}");
  add_file(testset);
  testset->add_option("--check", o.check_pairs, "Sample this many morphism pairs against the test set");
  testset->add_option("--seed", o.seed, "Seed for --check")->capture_default_str();

  CLI::App* factorize = app.add_subcommand("factorize", "Ratio-primitive factorization of each word");
  add_file(factorize);

  CLI::App* fuzz = app.add_subcommand("fuzz", "Randomized invariant checks");
  fuzz->add_option("--seed", o.fuzz.seed, "Seed (MORPHEQ_SEED overrides)")->capture_default_str();
  fuzz->add_option("--trials", o.fuzz.trials, "Trials per suite")->capture_default_str();
  fuzz->add_option("--max-image-len", o.fuzz.max_image_len, "Longest morphism image")->capture_default_str();
  fuzz->add_option("--alphabet-size", o.fuzz.target_alphabet_size, "Target alphabet size")->capture_default_str();
  fuzz->add_option("--max-word-len", o.fuzz.limits.max_word_len, "Search limit")->capture_default_str();
  fuzz->add_option("--max-overflow-len", o.fuzz.limits.max_overflow_len, "Search limit")->capture_default_str();
  fuzz->add_option("--max-states", o.fuzz.limits.max_states, "Search limit")->capture_default_str();
  fuzz->add_option("--workers", o.fuzz.workers, "Worker threads (0 = all cores)")->capture_default_str();
  fuzz->add_option("--suite", o.suites, "Suites to run (words, hull, blocks, generators, periodic, testset)");
  fuzz->add_option("--config", o.config_file, "JSON fuzz config; flags given here are overridden by it");
  fuzz->add_option("--witness-dir", o.witness_dir, "Write one JSON file per failed trial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    o.limits.validate();
    if (analyze->parsed()) return cmd_analyze(o, in, out);
    if (blocks->parsed()) return cmd_blocks(o, in, out, err);
    if (equality->parsed()) return cmd_equality(o, in, out);
    if (hull->parsed()) return cmd_hull(o, in, out);
    if (principal->parsed()) return cmd_principalize(o, in, out);
    if (testset->parsed()) return cmd_testset(o, in, out, err);
    if (factorize->parsed()) return cmd_factorize(o, in, out);
    if (fuzz->parsed()) return cmd_fuzz(o, out, err);
  } catch (const MalformedJson& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace morpheq::cli
