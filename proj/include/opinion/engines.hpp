#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "opinion/lexicon.hpp"
#include "opinion/pattern_engine.hpp"
#include "opinion/pos_tagger.hpp"
#include "opinion/preprocess.hpp"
#include "opinion/sentiment.hpp"
#include "opinion/synset_engine.hpp"
#include "opinion/valence_engine.hpp"

namespace opinion {

// paper_faithful: engines only see cleaned tokens. engine_native: the
// valence-rule engine also gets the raw text for its caps and '!' rules.
enum class PipelineMode { paper_faithful, engine_native };
std::string_view to_string(PipelineMode m) noexcept;
std::optional<PipelineMode> parse_pipeline_mode(std::string_view s) noexcept;

struct LexiconSet {
  Lexicon valence;
  Lexicon pattern;
  Lexicon synset;

  // Expects valence.tsv, pattern.tsv and synset.tsv in dir.
  static LexiconSet load(const std::filesystem::path& dir);
};

struct EngineConfig {
  PipelineMode mode = PipelineMode::paper_faithful;
  ValenceRuleConfig valence;
  PatternConfig pattern;
  Disambiguation disambiguation = Disambiguation::first_sense;
};

struct EngineScores {
  SentimentScore pattern_avg;
  SentimentScore synset;
  SentimentScore valence_rule;

  const SentimentScore& get(Engine e) const noexcept;
};

// Throws PreconditionViolation for a dropped document.
EngineScores score_all(const CleanedDocument& doc, const LexiconSet& lexicons,
                       const PosTagger& tagger, const EngineConfig& config);

}  // namespace opinion
