#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opinion/lexicon.hpp"
#include "opinion/pos_tagger.hpp"
#include "opinion/sentiment.hpp"

namespace opinion {

enum class Disambiguation { first_sense, average_senses };
std::string_view to_string(Disambiguation d) noexcept;
std::optional<Disambiguation> parse_disambiguation(std::string_view s) noexcept;

// Contribution of one (lemma, tag) pair, or absent when it has no senses.
std::optional<double> synset_contribution(const Lexicon& lexicon, std::string_view lemma,
                                          PosTag tag, Disambiguation mode);

SentimentScore score_synset(const std::vector<std::string>& tokens, const Lexicon& lexicon,
                            const PosTagger& tagger,
                            Disambiguation mode = Disambiguation::first_sense);

}  // namespace opinion
