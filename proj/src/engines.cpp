#include "opinion/engines.hpp"

#include "opinion/error.hpp"

namespace opinion {

std::string_view to_string(Engine e) noexcept {
  switch (e) {
    case Engine::pattern_avg: return "pattern_avg";
    case Engine::synset: return "synset";
    case Engine::valence_rule: return "valence_rule";
  }
  return "valence_rule";
}

std::optional<Engine> parse_engine(std::string_view s) noexcept {
  for (Engine e : kEngines) {
    if (to_string(e) == s) return e;
  }
  return std::nullopt;
}

std::string_view to_string(PipelineMode m) noexcept {
  return m == PipelineMode::paper_faithful ? "paper-faithful" : "engine-native";
}

std::optional<PipelineMode> parse_pipeline_mode(std::string_view s) noexcept {
  if (s == "paper-faithful" || s == "paper_faithful") return PipelineMode::paper_faithful;
  if (s == "engine-native" || s == "engine_native") return PipelineMode::engine_native;
  return std::nullopt;
}

LexiconSet LexiconSet::load(const std::filesystem::path& dir) {
  return LexiconSet{Lexicon::load(dir / "valence.tsv", LexiconKind::valence),
                    Lexicon::load(dir / "pattern.tsv", LexiconKind::pattern),
                    Lexicon::load(dir / "synset.tsv", LexiconKind::synset)};
}

const SentimentScore& EngineScores::get(Engine e) const noexcept {
  switch (e) {
    case Engine::pattern_avg: return pattern_avg;
    case Engine::synset: return synset;
    case Engine::valence_rule: return valence_rule;
  }
  return valence_rule;
}

EngineScores score_all(const CleanedDocument& doc, const LexiconSet& lexicons,
                       const PosTagger& tagger, const EngineConfig& config) {
  if (doc.dropped()) {
    throw Error(ErrorCode::PreconditionViolation,
                "document '" + doc.comment_id + "' was dropped and cannot be scored",
                std::nullopt, doc.comment_id);
  }
  std::optional<std::string_view> raw;
  if (config.mode == PipelineMode::engine_native && doc.raw_text) raw = *doc.raw_text;
  EngineScores s;
  s.valence_rule = score_valence_rule(raw, doc.tokens, lexicons.valence, config.valence);
  s.pattern_avg = score_pattern_avg(doc.tokens, lexicons.pattern, config.pattern);
  s.synset = score_synset(doc.tokens, lexicons.synset, tagger, config.disambiguation);
  return s;
}

}  // namespace opinion
