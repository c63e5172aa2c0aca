#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "opinion/corpus.hpp"
#include "opinion/pos.hpp"

namespace opinion {

using StopwordList = std::unordered_set<std::string>;

// One word per line; blank lines and '#' lines are skipped.
StopwordList load_stopwords(const std::filesystem::path& path);
StopwordList parse_stopwords(std::string_view content);

inline constexpr std::string_view kAsciiPunctuation = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";

// URLs are removed before punctuation; the other order would shred a URL into
// residue tokens.
std::string normalize(std::string_view text, std::string_view punctuation = kAsciiPunctuation);
std::vector<std::string> tokenize(std::string_view text);
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordList& stopwords);

class Lemmatizer {
 public:
  Lemmatizer() = default;
  // Rejects a table whose lemma is itself a key mapping elsewhere, since that
  // would make lemmatization non-idempotent.
  static Lemmatizer load(const std::filesystem::path& path);
  static Lemmatizer parse(std::string_view content);

  // Table lookup first, then headwords pass through, then suffix rules for
  // the hinted part of speech (noun when no hint).
  std::string lemmatize(std::string_view token, std::optional<PosTag> hint = std::nullopt) const;

  std::size_t size() const noexcept { return table_.size(); }

 private:
  std::string noun_rules(std::string_view token) const;
  std::string verb_rules(std::string_view token) const;
  std::string through_table(std::string candidate) const;

  std::unordered_map<std::string, std::string> table_;
  std::unordered_set<std::string> headwords_;
};

struct PreprocessConfig {
  StopwordList stopwords;
  std::size_t min_token_count = 3;
  bool apply_stemming = false;
  bool apply_lemmatization = true;
  std::string punctuation = std::string(kAsciiPunctuation);
};

enum class DropReason { none, null_text, too_short };
std::string_view to_string(DropReason r) noexcept;

struct CleanedDocument {
  std::string comment_id;
  std::optional<std::string> raw_text;
  std::vector<std::string> tokens;
  DropReason reason = DropReason::none;

  bool dropped() const noexcept { return reason != DropReason::none; }
};

CleanedDocument preprocess_comment(const Comment& comment, const PreprocessConfig& config,
                                   const Lemmatizer& lemmatizer);
std::vector<CleanedDocument> preprocess_corpus(const CommentCollection& collection,
                                               const PreprocessConfig& config,
                                               const Lemmatizer& lemmatizer);

// Compact sorted-key JSON, one document per line.
std::string cleaned_to_jsonl(const CleanedDocument& doc);

}  // namespace opinion
