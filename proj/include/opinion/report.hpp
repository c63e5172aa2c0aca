#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "opinion/analytics.hpp"
#include "opinion/labeling.hpp"
#include "opinion/sentiment.hpp"

namespace opinion {

struct ReportMeta {
  std::string config_digest;
  std::size_t corpus_size = 0;
  std::size_t kept = 0;
  std::size_t dropped = 0;
  std::string mode = "paper-faithful";
  std::string disambiguation = "first_sense";
  double epsilon = 0.0;
  std::size_t histogram_bins = 10;
  std::size_t top_n = 30;
};

struct CommentRow {
  std::string id;
  std::size_t token_count = 0;
  double valence_polarity = 0.0;
  Proportions valence_proportions;
  PolarityLabel valence_label = PolarityLabel::neutral;
  double pattern_polarity = 0.0;
  double pattern_subjectivity = 0.0;
  PolarityLabel pattern_label = PolarityLabel::neutral;
  double synset_polarity = 0.0;
  PolarityLabel synset_label = PolarityLabel::neutral;

  PolarityLabel label(Engine e) const noexcept;
  double polarity(Engine e) const noexcept;
};

struct DroppedRow {
  std::string id;
  std::string reason;
};

struct AnalysisReport {
  ReportMeta meta;
  std::vector<CommentRow> comments;
  std::array<DistributionReport, 3> distributions;  // indexed by Engine
  std::vector<DroppedRow> dropped;
  // [engine][side]
  std::array<std::array<WordRanking, 2>, 3> rankings;
  SubjectivityHistogram subjectivity;

  const DistributionReport& distribution(Engine e) const {
    return distributions[static_cast<int>(e)];
  }
  const WordRanking& ranking(Engine e, Side s) const {
    return rankings[static_cast<int>(e)][static_cast<int>(s)];
  }
};

nlohmann::json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& j);

// Pretty JSON with two-space indent and sorted keys. Reals are printed as
// "%.12f" with trailing zeros trimmed so output does not depend on the
// shortest-round-trip algorithm of any particular library.
std::string emit_json(const nlohmann::json& value);
std::string report_json_text(const AnalysisReport& report);
// Throws MalformedRecord for unparseable input.
AnalysisReport parse_report(std::string_view json_text);

std::string comments_csv(const AnalysisReport& report);
std::string ranking_csv(const WordRanking& ranking);

}  // namespace opinion
