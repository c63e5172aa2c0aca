#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "opinion/pos.hpp"

namespace opinion {

enum class LexiconKind { valence, pattern, synset };
std::string_view to_string(LexiconKind k) noexcept;

struct ValenceEntry {
  std::string word;
  double valence = 0.0;  // [-4, 4]
};

struct PatternEntry {
  std::string word;
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
  bool is_intensifier = false;
  double intensity_factor = 1.0;
};

struct SynsetEntry {
  std::string synset_id;
  PosTag pos = PosTag::noun;
  double pos_score = 0.0;
  double neg_score = 0.0;
  std::vector<std::string> lemmas;
  int sense_rank = 1;

  double objectivity() const noexcept { return 1.0 - pos_score - neg_score; }
  double net() const noexcept { return pos_score - neg_score; }
};

// An immutable, validated lexicon of one kind. Loading either accepts the
// whole file or throws; there is no partially loaded state.
class Lexicon {
 public:
  Lexicon(Lexicon&&) = default;
  Lexicon& operator=(Lexicon&&) = default;
  // Sense lists point into the entry storage.
  Lexicon(const Lexicon&) = delete;
  Lexicon& operator=(const Lexicon&) = delete;

  static Lexicon load(const std::filesystem::path& path, LexiconKind kind);
  static Lexicon parse(std::string_view content, LexiconKind kind,
                       std::string source_path = "<memory>");

  LexiconKind kind() const noexcept { return kind_; }
  const std::string& source_path() const noexcept { return source_path_; }
  std::size_t entry_count() const noexcept;

  // Each lookup throws WrongKind when called on a lexicon of another kind.
  std::optional<double> lookup_valence(std::string_view word) const;
  const PatternEntry* lookup_pattern(std::string_view word) const;
  // All senses for (lemma, pos) ordered by ascending sense_rank.
  const std::vector<const SynsetEntry*>& lookup_synsets(std::string_view lemma, PosTag pos) const;

  const std::vector<ValenceEntry>& valence_entries() const { return valence_; }
  const std::vector<PatternEntry>& pattern_entries() const { return pattern_; }
  const std::vector<SynsetEntry>& synset_entries() const { return synsets_; }

 private:
  explicit Lexicon(LexiconKind kind) : kind_(kind) {}
  void require(LexiconKind k) const;
  void index_synsets();

  LexiconKind kind_;
  std::string source_path_;
  std::vector<ValenceEntry> valence_;
  std::vector<PatternEntry> pattern_;
  std::vector<SynsetEntry> synsets_;
  std::unordered_map<std::string, std::size_t> word_index_;
  std::unordered_map<std::string, std::vector<const SynsetEntry*>> sense_index_;
};

std::optional<double> lookup_valence(const Lexicon& lexicon, std::string_view word);
const PatternEntry* lookup_pattern(const Lexicon& lexicon, std::string_view word);
const std::vector<const SynsetEntry*>& lookup_synsets(const Lexicon& lexicon,
                                                      std::string_view lemma, PosTag pos);

}  // namespace opinion
