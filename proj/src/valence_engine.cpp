#include "opinion/valence_engine.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "opinion/error.hpp"
#include "opinion/text.hpp"
#include "opinion/vocabulary.hpp"

namespace opinion {

namespace {

struct CapsEvidence {
  bool differential = false;  // some but not all words are upper case
  std::unordered_set<std::string> words;
};

CapsEvidence caps_evidence(std::string_view raw) {
  CapsEvidence ev;
  std::size_t alpha_words = 0;
  std::vector<std::string> upper;
  for (const auto& w : text::split_ws(raw)) {
    std::string s;
    for (char c : w) {
      if (!text::is_punct(c)) s.push_back(c);
    }
    if (std::none_of(s.begin(), s.end(), text::is_alpha)) continue;
    ++alpha_words;
    if (std::none_of(s.begin(), s.end(), text::is_lower)) upper.push_back(std::move(s));
  }
  ev.differential = !upper.empty() && upper.size() < alpha_words;
  for (const auto& u : upper) ev.words.insert(text::lower(u));
  return ev;
}

}  // namespace

void ValenceRuleConfig::validate() const {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::InvalidConfig, m); };
  if (negation_window < 0) fail("valence.negation_window must be >= 0");
  if (booster_increment < 0 || caps_increment < 0 || exclamation_increment < 0) {
    fail("valence increments must be >= 0");
  }
  if (max_exclamations < 0) fail("valence.max_exclamations must be >= 0");
  if (!(normalization_alpha > 0)) fail("valence.alpha must be > 0");
  for (double v : {negation_factor, booster_increment, caps_increment, exclamation_increment,
                   but_discount, but_boost, normalization_alpha}) {
    if (!std::isfinite(v)) fail("valence constants must be finite");
  }
}

double normalize_compound(double s, double alpha) {
  double c = s / std::sqrt(s * s + alpha);
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return c + 0.0;
}

ValenceBreakdown valence_breakdown(std::optional<std::string_view> raw_text,
                                   const std::vector<std::string>& tokens, const Lexicon& lexicon,
                                   const ValenceRuleConfig& config) {
  if (lexicon.kind() != LexiconKind::valence) {
    throw Error(ErrorCode::WrongKind, "valence-rule engine needs a valence lexicon");
  }
  CapsEvidence caps;
  if (raw_text) caps = caps_evidence(*raw_text);

  const std::size_t n = tokens.size();
  ValenceBreakdown out;
  auto& vals = out.token_valences;
  vals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& tok = tokens[i];
    std::optional<double> base;
    if (!vocab::is_booster(tok) && !vocab::is_negation(tok)) base = lexicon.lookup_valence(tok);
    if (!base) {
      vals.push_back(0.0);
      continue;
    }
    double v = *base;
    if (v != 0.0) {
      // Every booster in the run directly before the word contributes.
      for (std::size_t j = i; j-- > 0;) {
        auto dir = vocab::booster_direction(tokens[j]);
        if (!dir) break;
        double inc = config.booster_increment * *dir;
        if (v > 0) {
          v = v + inc;
          if (v < 0.0) v = 0.0;
        } else {
          v = v - inc;
          if (v > 0.0) v = 0.0;
        }
      }
      if (v != 0.0 && caps.differential && caps.words.contains(tok)) {
        v = v > 0 ? v + config.caps_increment : v - config.caps_increment;
      }
    }
    std::size_t from = i > static_cast<std::size_t>(config.negation_window)
                           ? i - static_cast<std::size_t>(config.negation_window)
                           : 0;
    bool negated = false;
    for (std::size_t k = from; k < i; ++k) {
      if (vocab::is_negation(tokens[k])) negated = true;
    }
    if (negated) v = v * config.negation_factor;
    vals.push_back(v);
  }

  auto but = std::find(tokens.begin(), tokens.end(), "but");
  if (but != tokens.end()) {
    auto b = static_cast<std::size_t>(but - tokens.begin());
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (i < b) {
        vals[i] = vals[i] * config.but_discount;
      } else if (i > b) {
        vals[i] = vals[i] * config.but_boost;
      }
    }
  }

  double s = 0.0;
  for (double v : vals) s = s + v;
  if (raw_text) {
    auto count = static_cast<int>(std::count(raw_text->begin(), raw_text->end(), '!'));
    count = std::min(count, config.max_exclamations);
    double amp = count * config.exclamation_increment;
    if (s > 0) {
      s = s + amp;
    } else if (s < 0) {
      s = s - amp;
    }
  }
  out.raw_sum = s;
  out.compound = normalize_compound(s, config.normalization_alpha);

  double pos = 0.0;
  double neg = 0.0;
  double neu = 0.0;
  for (double v : vals) {
    if (v > 0) {
      pos = pos + (v + 1.0);
    } else if (v < 0) {
      neg = neg + (-v + 1.0);
    } else {
      neu = neu + 1.0;
    }
  }
  double total = pos + neg + neu;
  if (total == 0.0) {
    out.proportions = {0.0, 1.0, 0.0};
  } else {
    out.proportions = {pos / total, neu / total, neg / total};
  }
  return out;
}

SentimentScore score_valence_rule(std::optional<std::string_view> raw_text,
                                  const std::vector<std::string>& tokens, const Lexicon& lexicon,
                                  const ValenceRuleConfig& config) {
  auto b = valence_breakdown(raw_text, tokens, lexicon, config);
  SentimentScore s;
  s.engine = Engine::valence_rule;
  s.polarity = b.compound;
  s.proportions = b.proportions;
  return s;
}

}  // namespace opinion
