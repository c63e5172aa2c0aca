#pragma once

#include <string>
#include <vector>

#include "opinion/lexicon.hpp"
#include "opinion/sentiment.hpp"

namespace opinion {

struct PatternConfig {
  int negation_window = 3;
  double negation_factor = -0.5;
};

// Mean polarity and mean subjectivity over the matched words. An intensifier
// directly followed by a matched word scales that word instead of scoring.
SentimentScore score_pattern_avg(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                                 const PatternConfig& config = {});

}  // namespace opinion
