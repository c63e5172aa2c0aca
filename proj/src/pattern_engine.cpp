#include "opinion/pattern_engine.hpp"

#include <algorithm>

#include "opinion/error.hpp"
#include "opinion/vocabulary.hpp"

namespace opinion {

SentimentScore score_pattern_avg(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                                 const PatternConfig& config) {
  if (lexicon.kind() != LexiconKind::pattern) {
    throw Error(ErrorCode::WrongKind, "pattern engine needs a pattern lexicon");
  }
  const std::size_t n = tokens.size();
  double pol_sum = 0.0;
  double sub_sum = 0.0;
  std::size_t matched = 0;
  double pending = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (vocab::is_negation(tokens[i])) continue;
    const PatternEntry* e = lexicon.lookup_pattern(tokens[i]);
    if (!e) continue;
    if (e->is_intensifier && i + 1 < n && !vocab::is_negation(tokens[i + 1]) &&
        lexicon.lookup_pattern(tokens[i + 1])) {
      pending = pending * e->intensity_factor;
      continue;
    }
    double p = e->polarity * pending;
    pending = 1.0;
    std::size_t from = i > static_cast<std::size_t>(config.negation_window)
                           ? i - static_cast<std::size_t>(config.negation_window)
                           : 0;
    for (std::size_t k = from; k < i; ++k) {
      if (vocab::is_negation(tokens[k])) {
        p = p * config.negation_factor;
        break;
      }
    }
    p = std::clamp(p, -1.0, 1.0);
    pol_sum = pol_sum + p;
    sub_sum = sub_sum + e->subjectivity;
    ++matched;
  }

  SentimentScore s;
  s.engine = Engine::pattern_avg;
  if (matched == 0) {
    s.polarity = 0.0;
    s.subjectivity = 0.0;
    return s;
  }
  auto m = static_cast<double>(matched);
  s.polarity = std::clamp(pol_sum / m, -1.0, 1.0) + 0.0;
  s.subjectivity = std::clamp(sub_sum / m, 0.0, 1.0) + 0.0;
  return s;
}

}  // namespace opinion
