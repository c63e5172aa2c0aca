#include "opinion/labeling.hpp"

namespace opinion {

std::string_view to_string(PolarityLabel l) noexcept {
  switch (l) {
    case PolarityLabel::negative: return "negative";
    case PolarityLabel::neutral: return "neutral";
    case PolarityLabel::positive: return "positive";
  }
  return "neutral";
}

std::optional<PolarityLabel> parse_label(std::string_view s) noexcept {
  if (s == "negative") return PolarityLabel::negative;
  if (s == "neutral") return PolarityLabel::neutral;
  if (s == "positive") return PolarityLabel::positive;
  return std::nullopt;
}

PolarityLabel label(double phi, double epsilon) noexcept {
  if (phi > epsilon) return PolarityLabel::positive;
  if (phi < -epsilon) return PolarityLabel::negative;
  return PolarityLabel::neutral;
}

PolarityLabel label(const SentimentScore& score, double epsilon) noexcept {
  return label(score.polarity, epsilon);
}

LabeledComment make_labeled(std::string comment_id, const SentimentScore& score, double epsilon) {
  return {std::move(comment_id), score.engine, score, label(score, epsilon)};
}

}  // namespace opinion
