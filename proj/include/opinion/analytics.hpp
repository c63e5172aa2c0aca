#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opinion/labeling.hpp"
#include "opinion/lexicon.hpp"
#include "opinion/pos_tagger.hpp"
#include "opinion/preprocess.hpp"
#include "opinion/sentiment.hpp"

namespace opinion {

struct DistributionReport {
  Engine engine = Engine::valence_rule;
  // Indexed by PolarityLabel.
  std::array<std::size_t, 3> counts{};

  std::size_t count(PolarityLabel l) const noexcept { return counts[static_cast<int>(l)]; }
  std::size_t total() const noexcept { return counts[0] + counts[1] + counts[2]; }
  // count / total, or 0.0 for an empty report.
  double proportion(PolarityLabel l) const noexcept;

  // Throws MixedEngines.
  DistributionReport& merge(const DistributionReport& other);

  bool operator==(const DistributionReport&) const = default;
};

DistributionReport distribution(const std::vector<LabeledComment>& labeled, Engine engine);

struct SubjectivityHistogram {
  std::vector<double> bin_edges;
  std::vector<std::size_t> counts;
  std::optional<double> mean;    // absent for empty input
  std::optional<double> median;

  bool operator==(const SubjectivityHistogram&) const = default;
};

// Uniform bins over [0, 1]; a value on an interior edge goes to the bin that
// starts there, and 1.0 joins the last bin.
SubjectivityHistogram subjectivity_histogram(const std::vector<double>& values,
                                             std::size_t bin_count = 10);
// Throws MissingSubjectivity if any score lacks a subjectivity.
SubjectivityHistogram subjectivity_histogram(const std::vector<SentimentScore>& scores,
                                             std::size_t bin_count = 10);

enum class Side { negative, positive };
inline constexpr std::array<Side, 2> kSides = {Side::negative, Side::positive};
std::string_view to_string(Side s) noexcept;

struct WordRanking {
  Engine engine = Engine::valence_rule;
  Side side = Side::positive;
  std::vector<std::pair<std::string, std::size_t>> entries;

  bool operator==(const WordRanking&) const = default;
};

// Sign of the word's own lexicon score under the engine: valence, pattern
// polarity, or rank-1 sense pos - neg for the word's tag.
bool word_qualifies(Engine engine, Side side, std::string_view word, const Lexicon& lexicon,
                    const PosTagger& tagger);

// Counts every occurrence of a qualifying word in documents labeled `side`.
// Documents are matched to labels by comment id; dropped documents and
// documents without a label are ignored. Ties break by ascending word.
WordRanking top_words(const std::vector<CleanedDocument>& documents,
                      const std::vector<LabeledComment>& labeled, const Lexicon& lexicon,
                      Engine engine, Side side, std::size_t n, const PosTagger& tagger);

}  // namespace opinion
