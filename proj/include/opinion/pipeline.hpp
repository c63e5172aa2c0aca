#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "opinion/analytics.hpp"
#include "opinion/config.hpp"
#include "opinion/corpus.hpp"
#include "opinion/engines.hpp"
#include "opinion/labeling.hpp"
#include "opinion/preprocess.hpp"
#include "opinion/report.hpp"

namespace opinion {

struct Resources {
  StopwordList stopwords;
  Lemmatizer lemmatizer;
  PosTagger tagger;
  LexiconSet lexicons;
  // Config-digest key -> FNV digest of the file contents.
  std::map<std::string, std::string> digests;

  static Resources load(const RunConfig& config);
};

PreprocessConfig make_preprocess_config(const RunConfig& config, const Resources& resources);
EngineConfig make_engine_config(const RunConfig& config);

struct Analysis {
  std::vector<CleanedDocument> documents;
  // Kept documents only, indexed by Engine, in corpus order.
  std::array<std::vector<LabeledComment>, 3> labeled;
  AnalysisReport report;

  const std::vector<LabeledComment>& labels(Engine e) const {
    return labeled[static_cast<int>(e)];
  }
};

Analysis analyze(const CommentCollection& corpus, const Resources& resources,
                 const RunConfig& config);

// Validates, loads and computes everything before the first byte is written,
// so a failing run leaves no partial output.
AnalysisReport run_analyze(const RunConfig& config);
// Writes cleaned.jsonl into config.out_dir.
std::vector<CleanedDocument> run_preprocess_only(const RunConfig& config);

// Writes a file, creating parent directories; throws OutputNotWritable.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace opinion
