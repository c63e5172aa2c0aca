#include "opinion/analytics.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "opinion/error.hpp"
#include "opinion/synset_engine.hpp"

namespace opinion {

double DistributionReport::proportion(PolarityLabel l) const noexcept {
  std::size_t t = total();
  return t == 0 ? 0.0 : static_cast<double>(count(l)) / static_cast<double>(t);
}

DistributionReport& DistributionReport::merge(const DistributionReport& other) {
  if (other.engine != engine) {
    throw Error(ErrorCode::MixedEngines, "cannot merge " + std::string(to_string(other.engine)) +
                                             " into " + std::string(to_string(engine)));
  }
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  return *this;
}

DistributionReport distribution(const std::vector<LabeledComment>& labeled, Engine engine) {
  DistributionReport r;
  r.engine = engine;
  for (const auto& lc : labeled) {
    if (lc.engine != engine) {
      throw Error(ErrorCode::MixedEngines,
                  "comment '" + lc.comment_id + "' was labeled by " +
                      std::string(to_string(lc.engine)) + ", expected " +
                      std::string(to_string(engine)),
                  std::nullopt, lc.comment_id);
    }
    ++r.counts[static_cast<int>(lc.label)];
  }
  return r;
}

SubjectivityHistogram subjectivity_histogram(const std::vector<double>& values,
                                             std::size_t bin_count) {
  if (bin_count == 0) throw Error(ErrorCode::InvalidConfig, "histogram needs at least one bin");
  SubjectivityHistogram h;
  const auto bins = static_cast<double>(bin_count);
  for (std::size_t k = 0; k <= bin_count; ++k) h.bin_edges.push_back(static_cast<double>(k) / bins);
  h.counts.assign(bin_count, 0);
  for (double x : values) {
    std::size_t idx = 0;
    if (x >= 1.0) {
      idx = bin_count - 1;
    } else {
      // Last edge not above x; comparing against the stored edges keeps
      // boundary values consistent with what the report prints.
      for (std::size_t k = 0; k < bin_count; ++k) {
        if (h.bin_edges[k] <= x) idx = k;
      }
    }
    ++h.counts[idx];
  }
  if (!values.empty()) {
    double s = 0.0;
    for (double x : values) s = s + x;
    h.mean = s / static_cast<double>(values.size());
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::size_t m = sorted.size();
    h.median = m % 2 == 1 ? sorted[m / 2] : (sorted[m / 2 - 1] + sorted[m / 2]) / 2.0;
  }
  return h;
}

SubjectivityHistogram subjectivity_histogram(const std::vector<SentimentScore>& scores,
                                             std::size_t bin_count) {
  std::vector<double> values;
  values.reserve(scores.size());
  for (const auto& s : scores) {
    if (!s.subjectivity) {
      throw Error(ErrorCode::MissingSubjectivity,
                  std::string(to_string(s.engine)) + " score carries no subjectivity");
    }
    values.push_back(*s.subjectivity);
  }
  return subjectivity_histogram(values, bin_count);
}

std::string_view to_string(Side s) noexcept {
  return s == Side::positive ? "positive" : "negative";
}

bool word_qualifies(Engine engine, Side side, std::string_view word, const Lexicon& lexicon,
                    const PosTagger& tagger) {
  std::optional<double> score;
  switch (engine) {
    case Engine::valence_rule:
      score = lexicon.lookup_valence(word);
      break;
    case Engine::pattern_avg:
      if (const auto* e = lexicon.lookup_pattern(word)) score = e->polarity;
      break;
    case Engine::synset:
      score = synset_contribution(lexicon, word, tagger.tag(word), Disambiguation::first_sense);
      break;
  }
  if (!score) return false;
  return side == Side::positive ? *score > 0 : *score < 0;
}

WordRanking top_words(const std::vector<CleanedDocument>& documents,
                      const std::vector<LabeledComment>& labeled, const Lexicon& lexicon,
                      Engine engine, Side side, std::size_t n, const PosTagger& tagger) {
  std::unordered_map<std::string_view, PolarityLabel> labels;
  for (const auto& lc : labeled) {
    if (lc.engine != engine) {
      throw Error(ErrorCode::MixedEngines,
                  "ranking for " + std::string(to_string(engine)) + " given a " +
                      std::string(to_string(lc.engine)) + " label",
                  std::nullopt, lc.comment_id);
    }
    labels.emplace(lc.comment_id, lc.label);
  }
  const PolarityLabel wanted = side == Side::positive ? PolarityLabel::positive
                                                      : PolarityLabel::negative;
  std::unordered_map<std::string_view, bool> qualifies;
  std::unordered_map<std::string_view, std::size_t> counts;
  for (const auto& doc : documents) {
    if (doc.dropped()) continue;
    auto it = labels.find(doc.comment_id);
    if (it == labels.end() || it->second != wanted) continue;
    for (const auto& tok : doc.tokens) {
      auto q = qualifies.find(tok);
      if (q == qualifies.end()) {
        q = qualifies.emplace(tok, word_qualifies(engine, side, tok, lexicon, tagger)).first;
      }
      if (q->second) ++counts[tok];
    }
  }
  WordRanking r;
  r.engine = engine;
  r.side = side;
  r.entries.reserve(counts.size());
  for (const auto& [w, c] : counts) r.entries.emplace_back(std::string(w), c);
  std::sort(r.entries.begin(), r.entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (r.entries.size() > n) r.entries.resize(n);
  return r;
}

}  // namespace opinion
