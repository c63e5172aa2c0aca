// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// `--write-svg-digests` regenerates the pinned plot digests instead.

#include <fmt/core.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "opinion/analytics.hpp"
#include "opinion/engines.hpp"
#include "opinion/error.hpp"
#include "opinion/labeling.hpp"
#include "opinion/pipeline.hpp"
#include "opinion/svg.hpp"
#include "opinion/text.hpp"
#include "opinion/vocabulary.hpp"

namespace fs = std::filesystem;
using namespace opinion;

namespace {

const fs::path kGolden = OPINION_GOLDEN_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    path_ = fs::temp_directory_path() /
            fmt::format("opinion_accept_{}_{}", tag, std::random_device{}());
    fs::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

// Shared resources, loaded once.
const Resources& resources() {
  static const Resources r = Resources::load(RunConfig{});
  return r;
}

std::vector<std::string> word_pool() {
  const auto& lex = resources().lexicons;
  std::vector<std::string> words;
  for (const auto& e : lex.valence.valence_entries()) words.push_back(e.word);
  for (const auto& e : lex.pattern.pattern_entries()) words.push_back(e.word);
  for (const auto& e : lex.synset.synset_entries())
    for (const auto& l : e.lemmas) words.push_back(l);
  for (auto w : vocab::negations()) words.emplace_back(w);
  for (auto w : vocab::amplifiers()) words.emplace_back(w);
  for (auto w : vocab::dampeners()) words.emplace_back(w);
  words.emplace_back("but");
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

std::string random_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 9), ch('a', 'z');
  std::string w(static_cast<std::size_t>(len(rng)), 'a');
  for (auto& c : w) c = static_cast<char>(ch(rng));
  return w;
}

std::vector<std::string> random_tokens(std::mt19937_64& rng, const std::vector<std::string>& pool,
                                       std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::bernoulli_distribution junk(0.25);
  std::vector<std::string> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back(junk(rng) ? random_word(rng) : pool[pick(rng)]);
  return t;
}

std::string join(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) {
    if (!s.empty()) s += ' ';
    s += t;
  }
  return s;
}

// 1 -------------------------------------------------------------------------
Outcome label_conformance() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::size_t wrong = 0, zeros = 0;
  for (int i = 0; i < 100000; ++i) {
    double phi = u(rng);
    if (i % 100 == 0) phi = 0.0;
    if (i % 1000 == 1) phi = -0.0;
    if (i % 1000 == 2) phi = std::nextafter(0.0, 1.0);
    if (i % 1000 == 3) phi = std::nextafter(0.0, -1.0);
    if (i % 1000 == 4) phi = (i % 2000 == 4) ? 1.0 : -1.0;
    auto expect = phi > 0 ? PolarityLabel::positive
                          : (phi < 0 ? PolarityLabel::negative : PolarityLabel::neutral);
    if (phi == 0.0) ++zeros;
    if (label(phi, 0.0) != expect) ++wrong;
  }
  double secs = seconds_since(t0);
  return {wrong == 0 && secs < 5.0,
          fmt::format("100000 values ({} zeros), {} misclassified, {:.3f}s", zeros, wrong, secs)};
}

// 2 -------------------------------------------------------------------------
Outcome boundedness() {
  auto t0 = Clock::now();
  const auto& res = resources();
  auto pool = word_pool();
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> len(0, 100);
  std::bernoulli_distribution shout(0.1), bang(0.1);
  EngineConfig faithful;
  EngineConfig native;
  native.mode = PipelineMode::engine_native;
  native.disambiguation = Disambiguation::average_senses;
  std::size_t violations = 0;
  auto check = [&](const SentimentScore& s) {
    bool ok = s.polarity >= -1.0 && s.polarity <= 1.0 && !std::isnan(s.polarity);
    if (s.subjectivity) ok = ok && *s.subjectivity >= 0.0 && *s.subjectivity <= 1.0;
    if (s.proportions) {
      const auto& p = *s.proportions;
      ok = ok && p.positive >= 0 && p.neutral >= 0 && p.negative >= 0 &&
           std::abs(p.positive + p.neutral + p.negative - 1.0) <= 1e-9;
    }
    if (!ok) ++violations;
  };
  for (int i = 0; i < 10000; ++i) {
    auto tokens = random_tokens(rng, pool, len(rng));
    // Raw text for the native mode, with caps and '!' sprinkled in.
    std::string raw;
    for (const auto& t : tokens) {
      std::string w = t;
      if (shout(rng)) std::transform(w.begin(), w.end(), w.begin(), ::toupper);
      if (bang(rng)) w += "!!!";
      raw += w + ' ';
    }
    CleanedDocument doc{"x", raw, tokens, DropReason::none};
    for (const auto* cfg : {&faithful, &native}) {
      auto s = score_all(doc, res.lexicons, res.tagger, *cfg);
      for (auto e : kEngines) check(s.get(e));
    }
  }
  double secs = seconds_since(t0);
  return {violations == 0 && secs < 30.0,
          fmt::format("10000 sequences x 2 modes x 3 engines, {} violations, {:.3f}s", violations,
                      secs)};
}

// 3 -------------------------------------------------------------------------
Outcome negation_flip() {
  const auto& lex = resources().lexicons.valence;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  for (const auto& e : lex.valence_entries()) {
    if (e.valence == 0.0) continue;
    ++checked;
    double c = score_valence_rule(std::nullopt, {"not", e.word}, lex).polarity;
    bool ok = e.valence > 0 ? c < 0.0 : c > 0.0;
    if (!ok) failures.push_back(e.word);
  }
  std::string detail = fmt::format("{}/{} lexicon words flip sign", checked - failures.size(), checked);
  if (!failures.empty()) detail += " (first failure: " + failures.front() + ")";
  return {failures.empty() && checked > 0, detail};
}

// 4 -------------------------------------------------------------------------
Outcome normalization_oracle() {
  const double alpha = ValenceRuleConfig{}.normalization_alpha;
  auto direct = [&](double s) {
    long double ls = s;
    return static_cast<double>(ls / std::sqrt(ls * ls + static_cast<long double>(alpha)));
  };
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double s = u(rng);
    worst = std::max(worst, std::abs(normalize_compound(s, alpha) - direct(s)));
  }
  // The same check through the engine, on its own raw sums.
  auto pool = word_pool();
  std::uniform_int_distribution<std::size_t> len(0, 40);
  std::size_t engine_checks = 0;
  for (int i = 0; i < 1000; ++i) {
    auto b = valence_breakdown(std::nullopt, random_tokens(rng, pool, len(rng)),
                               resources().lexicons.valence);
    if (std::abs(b.raw_sum) > 20.0) continue;
    worst = std::max(worst, std::abs(b.compound - direct(b.raw_sum)));
    ++engine_checks;
  }
  return {worst <= 1e-12,
          fmt::format("1000 sampled sums + {} engine sums, max |error| {:.3g}", engine_checks, worst)};
}

// 5 -------------------------------------------------------------------------
Outcome golden_equivalence() {
  ScratchDir dir("golden");
  RunConfig cfg;
  cfg.input = kGolden / "corpus.csv";
  cfg.out_dir = dir.path();
  auto t0 = Clock::now();
  run_analyze(cfg);
  double secs = seconds_since(t0);

  std::vector<std::string> problems;
  if (text::read_file(dir.path() / "report.json") != text::read_file(kGolden / "report.json"))
    problems.push_back("report.json differs");

  auto manifest = nlohmann::json::parse(text::read_file(kGolden / "manifest.json"));
  auto corpus = load_corpus(cfg.input, CorpusFormat::csv);
  std::string ids;
  for (const auto& c : corpus) ids += c.id + "\n";
  if (text::digest(ids) != manifest["id_checksum"].get<std::string>()) problems.push_back("id checksum");
  if (corpus.record_count() != manifest["record_count"].get<std::size_t>())
    problems.push_back("record count");

  const auto& res = resources();
  auto docs = preprocess_corpus(corpus, make_preprocess_config(cfg, res), res.lemmatizer);
  std::size_t kept = 0, compared = 0;
  const auto& per = manifest["per_comment"];
  for (const auto& d : docs) {
    if (d.dropped()) continue;
    ++kept;
    if (!per.contains(d.comment_id)) {
      problems.push_back(d.comment_id + " missing from manifest");
      continue;
    }
    const auto& m = per[d.comment_id];
    auto s = score_all(d, res.lexicons, res.tagger, make_engine_config(cfg));
    EngineConfig avg = make_engine_config(cfg);
    avg.disambiguation = Disambiguation::average_senses;
    auto s_avg = score_all(d, res.lexicons, res.tagger, avg);
    const auto& p = *s.valence_rule.proportions;
    bool same = d.tokens == m["tokens"].get<std::vector<std::string>>() &&
                s.valence_rule.polarity == m["valence_rule"].get<double>() &&
                p.positive == m["valence_proportions"][0].get<double>() &&
                p.neutral == m["valence_proportions"][1].get<double>() &&
                p.negative == m["valence_proportions"][2].get<double>() &&
                s.pattern_avg.polarity == m["pattern_avg"].get<double>() &&
                *s.pattern_avg.subjectivity == m["pattern_subjectivity"].get<double>() &&
                s.synset.polarity == m["synset_first_sense"].get<double>() &&
                s_avg.synset.polarity == m["synset_average_senses"].get<double>();
    if (!same) problems.push_back(d.comment_id + " scores differ");
    ++compared;
  }
  if (kept != manifest["kept"].get<std::size_t>()) problems.push_back("kept count");
  if (secs >= 2.0) problems.push_back("too slow");
  std::string detail = fmt::format("report.json + {} per-comment score sets, {:.3f}s", compared, secs);
  if (!problems.empty()) detail += " (" + problems.front() + ")";
  return {problems.empty(), detail};
}

// 6 -------------------------------------------------------------------------
Outcome top_words_oracle() {
  const auto& res = resources();
  auto pool = word_pool();
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> len(0, 30);
  std::vector<CleanedDocument> docs;
  for (int i = 0; i < 200; ++i) {
    CleanedDocument d{fmt::format("r{:03d}", i), std::nullopt, random_tokens(rng, pool, len(rng)),
                      DropReason::none};
    // A shrunken vocabulary for some comments so counts tie often.
    if (i % 3 == 0)
      for (auto& t : d.tokens) t = pool[std::hash<std::string>{}(t) % 12];
    docs.push_back(std::move(d));
  }
  std::size_t mismatches = 0, pairs = 0, entries = 0;
  for (auto e : kEngines) {
    const Lexicon& lex = e == Engine::valence_rule  ? res.lexicons.valence
                         : e == Engine::pattern_avg ? res.lexicons.pattern
                                                    : res.lexicons.synset;
    std::vector<LabeledComment> labeled;
    for (const auto& d : docs)
      labeled.push_back(make_labeled(d.comment_id, score_all(d, res.lexicons, res.tagger, {}).get(e)));
    for (auto side : kSides) {
      ++pairs;
      auto got = top_words(docs, labeled, lex, e, side, 30, res.tagger);

      auto target = side == Side::positive ? PolarityLabel::positive : PolarityLabel::negative;
      auto word_score = [&](const std::string& w) -> std::optional<double> {
        if (e == Engine::valence_rule) return lex.lookup_valence(w);
        if (e == Engine::pattern_avg) {
          const auto* p = lex.lookup_pattern(w);
          return p ? std::optional<double>(p->polarity) : std::nullopt;
        }
        const auto& senses = lex.lookup_synsets(w, res.tagger.tag(w));
        return senses.empty() ? std::nullopt : std::optional<double>(senses.front()->net());
      };
      std::map<std::string, std::size_t> counts;
      for (std::size_t i = 0; i < docs.size(); ++i) {
        if (labeled[i].label != target) continue;
        for (const auto& w : docs[i].tokens) {
          auto s = word_score(w);
          if (s && (side == Side::positive ? *s > 0 : *s < 0)) ++counts[w];
        }
      }
      std::vector<std::pair<std::string, std::size_t>> expect(counts.begin(), counts.end());
      std::stable_sort(expect.begin(), expect.end(),
                       [](const auto& a, const auto& b) { return a.second > b.second; });
      if (expect.size() > 30) expect.resize(30);
      entries += expect.size();
      if (got.entries != expect) ++mismatches;
    }
  }
  return {mismatches == 0 && entries > 0,
          fmt::format("200 comments, {}/{} (engine, side) rankings match, {} entries", pairs - mismatches,
                      pairs, entries)};
}

// 7 -------------------------------------------------------------------------
std::string fuzz_text(std::mt19937_64& rng, const std::vector<std::string>& pool) {
  static const std::vector<std::string> extras = {
      "https://x.org/a", "www.y.com", "#tag", "@user", "!!!", "?", "don't", "it's", "1,500",
      "Caf\xC3\xA9",     "\xF0\x9F\x8C\x85", "\t", "\n", "  ", "-", "'", "\"q\"", "THE", "Running",
      "studies",         "ponies", "loved"};
  std::uniform_int_distribution<int> len(0, 25), kind(0, 9);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), ex(0, extras.size() - 1);
  std::string s;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int k = kind(rng);
    std::string w = k < 5 ? pool[pick(rng)] : k < 8 ? extras[ex(rng)] : random_word(rng);
    if (k == 4) std::transform(w.begin(), w.end(), w.begin(), ::toupper);
    s += w;
    s += (kind(rng) == 0) ? "," : " ";
  }
  return s;
}

Outcome idempotence() {
  const auto& res = resources();
  RunConfig rc;
  auto pcfg = make_preprocess_config(rc, res);
  auto stop_text = text::read_file(rc.stopwords_file());
  auto pool = word_pool();
  for (const auto& w : text::split_ws(stop_text))
    if (w[0] != '#') pool.push_back(w);
  std::mt19937_64 rng(7);
  std::bernoulli_distribution null_text(0.05);
  CommentCollection corpus;
  for (int i = 0; i < 1000; ++i) {
    Comment c;
    c.id = fmt::format("f{:04d}", i);
    if (!null_text(rng)) c.text = fuzz_text(rng, pool);
    corpus.comments.push_back(std::move(c));
  }
  auto docs = preprocess_corpus(corpus, pcfg, res.lemmatizer);
  std::size_t kept = 0, dropped = 0, unstable = 0;
  for (const auto& d : docs) {
    d.dropped() ? ++dropped : ++kept;
    if (!d.raw_text) continue;
    Comment again{d.comment_id, join(d.tokens), {}, {}};
    if (preprocess_comment(again, pcfg, res.lemmatizer).tokens != d.tokens) ++unstable;
  }
  bool ok = unstable == 0 && kept + dropped == corpus.comments.size() && docs.size() == 1000;
  return {ok, fmt::format("1000 comments: {} kept + {} dropped, {} not idempotent", kept, dropped,
                          unstable)};
}

// 8 -------------------------------------------------------------------------
Outcome shard_merge() {
  const auto& res = resources();
  RunConfig cfg;
  auto corpus = load_corpus(kGolden / "corpus.csv", CorpusFormat::csv);
  auto whole = analyze(corpus, res, cfg).report;
  std::size_t failures = 0;
  for (std::size_t shards : {1u, 2u, 5u, 10u}) {
    std::array<DistributionReport, 3> merged;
    for (auto e : kEngines) merged[static_cast<int>(e)].engine = e;
    std::size_t n = corpus.comments.size();
    for (std::size_t k = 0; k < shards; ++k) {
      CommentCollection part;
      for (std::size_t i = k * n / shards; i < (k + 1) * n / shards; ++i)
        part.comments.push_back(corpus.comments[i]);
      auto r = analyze(part, res, cfg).report;
      for (auto e : kEngines) merged[static_cast<int>(e)].merge(r.distribution(e));
    }
    if (merged != whole.distributions) ++failures;
  }
  return {failures == 0, fmt::format("1, 2, 5, 10 shards: {} merged results differ", failures)};
}

// 9 -------------------------------------------------------------------------
Outcome qualitative() {
  const auto& res = resources();
  RunConfig rc;
  auto pcfg = make_preprocess_config(rc, res);
  auto tokens_of = [&](const std::string& s) {
    return preprocess_comment(Comment{"q", s, {}, {}}, pcfg, res.lemmatizer).tokens;
  };
  std::vector<std::string> failed;

  auto healthier = tokens_of("Renewable energy sources maybe a bit expensive but are much healthier");
  double compound = score_valence_rule(std::nullopt, healthier, res.lexicons.valence).polarity;
  if (!(compound > 0)) failed.push_back("healthier compound");

  auto boring = tokens_of("I do not like offshore wind energy, it's boring!");
  auto cost = tokens_of(
      "Offshore wind energy costs us 10% more than our current usage which we cannot afford due "
      "to our profits being 20% lower this year");
  double subj_boring = *score_pattern_avg(boring, res.lexicons.pattern).subjectivity;
  double subj_cost = *score_pattern_avg(cost, res.lexicons.pattern).subjectivity;
  if (!(subj_boring > subj_cost)) failed.push_back("subjectivity ordering");

  auto esteem = tokens_of("The director is an estimable person and the project is worth supporting");
  bool tagged_adj = res.tagger.tag("estimable") == PosTag::adj;
  double esteem_score = score_synset({"estimable"}, res.lexicons.synset, res.tagger).polarity;
  if (!tagged_adj || !(esteem_score > 0) ||
      std::find(esteem.begin(), esteem.end(), "estimable") == esteem.end())
    failed.push_back("estimable esteem sense");

  // Only the computable sense, promoted to rank 1.
  auto computable = Lexicon::parse("estimable.a.02\tadj\t0.0\t0.0\t1\testimable,computable\n",
                                   LexiconKind::synset);
  double computable_score = score_synset({"estimable"}, computable, res.tagger).polarity;
  if (computable_score != 0.0) failed.push_back("estimable computable sense");

  std::string detail = fmt::format(
      "compound {:+.3f}; subjectivity {:.3f} > {:.3f}; estimable {:+.3f} / {:+.3f}", compound,
      subj_boring, subj_cost, esteem_score, computable_score);
  if (!failed.empty()) detail += " (failed: " + failed.front() + ")";
  return {failed.empty(), detail};
}

// 10 ------------------------------------------------------------------------
std::map<std::string, std::string> run_digests(const fs::path& out) {
  RunConfig cfg;
  cfg.input = kGolden / "corpus.csv";
  cfg.out_dir = out;
  cfg.plots = true;
  run_analyze(cfg);
  std::map<std::string, std::string> d;
  d["report.json"] = text::digest(text::read_file(out / "report.json"));
  for (const auto& entry : fs::directory_iterator(out / "plots"))
    d["plots/" + entry.path().filename().string()] = text::digest(text::read_file(entry.path()));
  return d;
}

std::string digest_listing(const std::map<std::string, std::string>& d) {
  std::string s;
  for (const auto& [name, digest] : d) s += digest + "  " + name + "\n";
  return s;
}

Outcome determinism() {
  ScratchDir a("run_a"), b("run_b");
  auto first = run_digests(a.path());
  auto second = run_digests(b.path());
  bool same = first == second;
  std::string detail = fmt::format("{} files, runs {}", first.size(), same ? "identical" : "differ");
  bool pinned_ok = true;
  auto pinned_path = kGolden / "svg_digests.txt";
  if (fs::exists(pinned_path)) {
    pinned_ok = text::read_file(pinned_path) == digest_listing(first);
    detail += pinned_ok ? ", match pinned digests" : ", differ from pinned digests";
  }
  return {same && pinned_ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "--write-svg-digests") {
    ScratchDir dir("pin");
    std::ofstream(kGolden / "svg_digests.txt", std::ios::binary)
        << digest_listing(run_digests(dir.path()));
    return 0;
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"label sign conformance", label_conformance},
      {"engine boundedness fuzz", boundedness},
      {"negation sign flip", negation_flip},
      {"compound normalization oracle", normalization_oracle},
      {"golden corpus equivalence", golden_equivalence},
      {"top-words brute-force oracle", top_words_oracle},
      {"preprocessing idempotence and accounting", idempotence},
      {"shard-merge associativity", shard_merge},
      {"qualitative examples", qualitative},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    fmt::print("{} {:2} {}: {}\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
