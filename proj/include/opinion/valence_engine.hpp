#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opinion/lexicon.hpp"
#include "opinion/sentiment.hpp"

namespace opinion {

struct ValenceRuleConfig {
  int negation_window = 3;
  double negation_factor = -0.74;
  double booster_increment = 0.293;
  double caps_increment = 0.733;
  double exclamation_increment = 0.292;
  int max_exclamations = 4;
  double but_discount = 0.5;
  double but_boost = 1.5;
  double normalization_alpha = 15.0;

  // Throws InvalidConfig.
  void validate() const;
};

struct ValenceBreakdown {
  std::vector<double> token_valences;  // after boosters, caps, negation and "but"
  double raw_sum = 0.0;                // including exclamation amplification
  double compound = 0.0;
  Proportions proportions;
};

// s / sqrt(s^2 + alpha), clamped to [-1, 1].
double normalize_compound(double s, double alpha);

// raw_text is absent in paper-faithful mode, which disables the caps and
// exclamation heuristics.
ValenceBreakdown valence_breakdown(std::optional<std::string_view> raw_text,
                                   const std::vector<std::string>& tokens, const Lexicon& lexicon,
                                   const ValenceRuleConfig& config = {});
SentimentScore score_valence_rule(std::optional<std::string_view> raw_text,
                                  const std::vector<std::string>& tokens, const Lexicon& lexicon,
                                  const ValenceRuleConfig& config = {});

}  // namespace opinion
