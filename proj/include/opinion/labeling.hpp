#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "opinion/sentiment.hpp"

namespace opinion {

// Listed in report key order.
enum class PolarityLabel { negative, neutral, positive };

std::string_view to_string(PolarityLabel l) noexcept;
std::optional<PolarityLabel> parse_label(std::string_view s) noexcept;

// positive iff phi > epsilon, negative iff phi < -epsilon, neutral otherwise.
PolarityLabel label(double phi, double epsilon = 0.0) noexcept;
PolarityLabel label(const SentimentScore& score, double epsilon = 0.0) noexcept;

struct LabeledComment {
  std::string comment_id;
  Engine engine = Engine::valence_rule;
  SentimentScore score;
  PolarityLabel label = PolarityLabel::neutral;
};

LabeledComment make_labeled(std::string comment_id, const SentimentScore& score,
                            double epsilon = 0.0);

}  // namespace opinion
