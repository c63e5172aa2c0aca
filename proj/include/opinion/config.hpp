#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "opinion/corpus.hpp"
#include "opinion/engines.hpp"

namespace opinion {

struct RunConfig {
  std::filesystem::path input;
  CorpusFormat format = CorpusFormat::csv;
  ParseMode parse_mode = ParseMode::strict;

  // Root of the bundled resources; individual files may be overridden.
  std::filesystem::path data_dir = OPINION_DEFAULT_DATA_DIR;
  std::optional<std::filesystem::path> lexicon_dir;
  std::optional<std::filesystem::path> valence_path;
  std::optional<std::filesystem::path> pattern_path;
  std::optional<std::filesystem::path> synset_path;
  std::optional<std::filesystem::path> stopwords_path;
  std::optional<std::filesystem::path> lemmas_path;
  std::optional<std::filesystem::path> pos_tags_path;

  PipelineMode mode = PipelineMode::paper_faithful;
  std::size_t min_tokens = 3;
  bool lemmatize = true;
  bool stem = false;
  double epsilon = 0.0;
  std::size_t top_n = 30;
  std::size_t histogram_bins = 10;
  Disambiguation disambiguation = Disambiguation::first_sense;
  ValenceRuleConfig valence;

  std::filesystem::path out_dir = "out";
  bool plots = false;

  std::filesystem::path valence_file() const;
  std::filesystem::path pattern_file() const;
  std::filesystem::path synset_file() const;
  std::filesystem::path stopwords_file() const;
  std::filesystem::path lemmas_file() const;
  std::filesystem::path pos_tags_file() const;

  // Sets one key as it would appear in a config file. Throws InvalidConfig
  // for unknown keys and unparseable values.
  void set(std::string_view key, std::string_view value);

  // Range checks plus existence of every referenced input file. Throws
  // InvalidConfig.
  void validate(bool need_input = true) const;
};

// Flat "key = value" lines; '#' starts a comment line. Values are applied on
// top of `base`, so flags can be layered afterwards with RunConfig::set.
RunConfig parse_config_text(std::string_view content, RunConfig base = {});
RunConfig load_config_file(const std::filesystem::path& path, RunConfig base = {});

// FNV-1a over the sorted "key=value\n" lines of every setting that can change
// a report, with resource files represented by their own digests.
std::string config_digest(const RunConfig& config,
                          const std::map<std::string, std::string>& resource_digests);

}  // namespace opinion
