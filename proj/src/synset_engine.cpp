#include "opinion/synset_engine.hpp"

#include <algorithm>

#include "opinion/error.hpp"

namespace opinion {

std::string_view to_string(Disambiguation d) noexcept {
  return d == Disambiguation::first_sense ? "first_sense" : "average_senses";
}

std::optional<Disambiguation> parse_disambiguation(std::string_view s) noexcept {
  if (s == "first_sense") return Disambiguation::first_sense;
  if (s == "average_senses") return Disambiguation::average_senses;
  return std::nullopt;
}

std::optional<double> synset_contribution(const Lexicon& lexicon, std::string_view lemma,
                                          PosTag tag, Disambiguation mode) {
  const auto& senses = lexicon.lookup_synsets(lemma, tag);
  if (senses.empty()) return std::nullopt;
  if (mode == Disambiguation::first_sense) return senses.front()->net();
  double num = 0.0;
  double den = 0.0;
  for (const SynsetEntry* s : senses) {
    auto r = static_cast<double>(s->sense_rank);
    num = num + s->net() / r;
    den = den + 1.0 / r;
  }
  return num / den;
}

SentimentScore score_synset(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                            const PosTagger& tagger, Disambiguation mode) {
  if (lexicon.kind() != LexiconKind::synset) {
    throw Error(ErrorCode::WrongKind, "synset engine needs a synset lexicon");
  }
  double sum = 0.0;
  std::size_t matched = 0;
  for (const auto& t : tokens) {
    if (auto c = synset_contribution(lexicon, t, tagger.tag(t), mode)) {
      sum = sum + *c;
      ++matched;
    }
  }
  SentimentScore s;
  s.engine = Engine::synset;
  s.polarity = matched == 0 ? 0.0 : std::clamp(sum / static_cast<double>(matched), -1.0, 1.0) + 0.0;
  return s;
}

}  // namespace opinion
