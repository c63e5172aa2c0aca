#include "opinion/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "opinion/error.hpp"
#include "opinion/svg.hpp"
#include "opinion/text.hpp"

namespace opinion {

Resources Resources::load(const RunConfig& c) {
  auto stop_text = text::read_file(c.stopwords_file());
  auto lemma_text = text::read_file(c.lemmas_file());
  auto tag_text = text::read_file(c.pos_tags_file());
  auto val_text = text::read_file(c.valence_file());
  auto pat_text = text::read_file(c.pattern_file());
  auto syn_text = text::read_file(c.synset_file());
  return Resources{
      parse_stopwords(stop_text),
      Lemmatizer::parse(lemma_text),
      PosTagger::parse(tag_text),
      LexiconSet{Lexicon::parse(val_text, LexiconKind::valence, c.valence_file().string()),
                 Lexicon::parse(pat_text, LexiconKind::pattern, c.pattern_file().string()),
                 Lexicon::parse(syn_text, LexiconKind::synset, c.synset_file().string())},
      {{"stopwords", text::digest(stop_text)},
       {"lemmas", text::digest(lemma_text)},
       {"pos_tags", text::digest(tag_text)},
       {"lexicon.valence", text::digest(val_text)},
       {"lexicon.pattern", text::digest(pat_text)},
       {"lexicon.synset", text::digest(syn_text)}},
  };
}

PreprocessConfig make_preprocess_config(const RunConfig& config, const Resources& resources) {
  PreprocessConfig p;
  p.stopwords = resources.stopwords;
  p.min_token_count = config.min_tokens;
  p.apply_lemmatization = config.lemmatize;
  p.apply_stemming = config.stem;
  return p;
}

EngineConfig make_engine_config(const RunConfig& config) {
  EngineConfig e;
  e.mode = config.mode;
  e.valence = config.valence;
  e.disambiguation = config.disambiguation;
  return e;
}

Analysis analyze(const CommentCollection& corpus, const Resources& resources,
                 const RunConfig& config) {
  Analysis a;
  a.documents =
      preprocess_corpus(corpus, make_preprocess_config(config, resources), resources.lemmatizer);
  const EngineConfig engine_config = make_engine_config(config);

  auto& r = a.report;
  std::vector<SentimentScore> pattern_scores;
  for (const auto& doc : a.documents) {
    if (doc.dropped()) {
      r.dropped.push_back({doc.comment_id, std::string(to_string(doc.reason))});
      continue;
    }
    auto scores = score_all(doc, resources.lexicons, resources.tagger, engine_config);
    CommentRow row;
    row.id = doc.comment_id;
    row.token_count = doc.tokens.size();
    for (Engine e : kEngines) {
      a.labeled[static_cast<int>(e)].push_back(
          make_labeled(doc.comment_id, scores.get(e), config.epsilon));
    }
    row.valence_polarity = scores.valence_rule.polarity;
    row.valence_proportions = *scores.valence_rule.proportions;
    row.valence_label = a.labeled[static_cast<int>(Engine::valence_rule)].back().label;
    row.pattern_polarity = scores.pattern_avg.polarity;
    row.pattern_subjectivity = *scores.pattern_avg.subjectivity;
    row.pattern_label = a.labeled[static_cast<int>(Engine::pattern_avg)].back().label;
    row.synset_polarity = scores.synset.polarity;
    row.synset_label = a.labeled[static_cast<int>(Engine::synset)].back().label;
    r.comments.push_back(std::move(row));
    pattern_scores.push_back(scores.pattern_avg);
  }

  for (Engine e : kEngines) {
    const auto i = static_cast<int>(e);
    r.distributions[i] = distribution(a.labeled[i], e);
    const Lexicon& lex = e == Engine::valence_rule  ? resources.lexicons.valence
                         : e == Engine::pattern_avg ? resources.lexicons.pattern
                                                    : resources.lexicons.synset;
    for (Side s : kSides) {
      r.rankings[i][static_cast<int>(s)] =
          top_words(a.documents, a.labeled[i], lex, e, s, config.top_n, resources.tagger);
    }
  }
  r.subjectivity = subjectivity_histogram(pattern_scores, config.histogram_bins);

  auto& m = r.meta;
  m.config_digest = config_digest(config, resources.digests);
  m.corpus_size = a.documents.size();
  m.kept = r.comments.size();
  m.dropped = r.dropped.size();
  m.mode = std::string(to_string(config.mode));
  m.disambiguation = std::string(to_string(config.disambiguation));
  m.epsilon = config.epsilon;
  m.histogram_bins = config.histogram_bins;
  m.top_n = config.top_n;
  return a;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (ec || !f) {
    throw Error(ErrorCode::OutputNotWritable, "cannot write '" + path.string() + "'",
                std::nullopt, path.string());
  }
  f << content;
  f.flush();
  if (!f) {
    throw Error(ErrorCode::OutputNotWritable, "write failed for '" + path.string() + "'",
                std::nullopt, path.string());
  }
}

AnalysisReport run_analyze(const RunConfig& config) {
  config.validate();
  Resources resources = Resources::load(config);
  CommentCollection corpus = load_corpus(config.input, config.format, {config.parse_mode});
  Analysis a = analyze(corpus, resources, config);

  std::map<std::filesystem::path, std::string> files;
  files["report.json"] = report_json_text(a.report);
  files["comments.csv"] = comments_csv(a.report);
  for (Engine e : kEngines) {
    for (Side s : kSides) {
      files[std::string("ranking_") + std::string(to_string(e)) + "_" +
            std::string(to_string(s)) + ".csv"] = ranking_csv(a.report.ranking(e, s));
    }
  }
  if (config.parse_mode == ParseMode::lenient) {
    std::ostringstream skipped;
    write_skip_report(corpus.skipped, skipped);
    files["skipped.jsonl"] = skipped.str();
  }
  if (config.plots) {
    for (auto& [name, svg] : svg::render_plots(a.report)) {
      files[std::filesystem::path("plots") / name] = std::move(svg);
    }
  }
  for (const auto& [rel, content] : files) write_text_file(config.out_dir / rel, content);
  return std::move(a.report);
}

std::vector<CleanedDocument> run_preprocess_only(const RunConfig& config) {
  config.validate();
  Resources resources = Resources::load(config);
  CommentCollection corpus = load_corpus(config.input, config.format, {config.parse_mode});
  auto docs =
      preprocess_corpus(corpus, make_preprocess_config(config, resources), resources.lemmatizer);
  std::string out;
  for (const auto& d : docs) out += cleaned_to_jsonl(d) + "\n";
  write_text_file(config.out_dir / "cleaned.jsonl", out);
  return docs;
}

}  // namespace opinion
