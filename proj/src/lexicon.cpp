#include "opinion/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_set>

#include "opinion/error.hpp"
#include "opinion/text.hpp"

namespace opinion {

namespace {

std::string sense_key(std::string_view lemma, PosTag pos) {
  std::string key(lemma);
  key.push_back('\t');
  key += to_string(pos);
  return key;
}

double parse_real(std::string_view s, std::size_t line, std::string_view what) {
  s = text::trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::MalformedEntry, "bad " + std::string(what) + " '" + std::string(s) + "'",
                line);
  }
  return v;
}

void check_range(double v, double lo, double hi, std::size_t line, std::string_view what) {
  if (v < lo || v > hi) {
    throw Error(ErrorCode::OutOfRangeScore,
                std::string(what) + " " + text::format_exact(v) + " outside [" +
                    text::format_exact(lo) + ", " + text::format_exact(hi) + "]",
                line);
  }
}

std::string checked_word(std::string_view w, std::size_t line) {
  w = text::trim(w);
  if (!text::is_lowercase_word(w)) {
    throw Error(ErrorCode::MalformedEntry, "word '" + std::string(w) + "' is not a lowercase word",
                line);
  }
  return std::string(w);
}

std::vector<std::string_view> fields_of(std::string_view line, std::size_t expected,
                                        std::size_t line_no) {
  auto f = text::split(line, '\t');
  if (f.size() != expected) {
    throw Error(ErrorCode::MalformedEntry,
                "expected " + std::to_string(expected) + " tab-separated fields, found " +
                    std::to_string(f.size()),
                line_no);
  }
  return f;
}

}  // namespace

std::string_view to_string(LexiconKind k) noexcept {
  switch (k) {
    case LexiconKind::valence: return "valence";
    case LexiconKind::pattern: return "pattern";
    case LexiconKind::synset: return "synset";
  }
  return "valence";
}

Lexicon Lexicon::load(const std::filesystem::path& path, LexiconKind kind) {
  return parse(text::read_file(path), kind, path.string());
}

Lexicon Lexicon::parse(std::string_view content, LexiconKind kind, std::string source_path) {
  Lexicon lex(kind);
  lex.source_path_ = std::move(source_path);
  std::unordered_set<std::string> synset_ids;
  std::unordered_set<std::string> ranks;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    auto line = content.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;

    switch (kind) {
      case LexiconKind::valence: {
        auto f = fields_of(line, 2, line_no);
        ValenceEntry e{checked_word(f[0], line_no), parse_real(f[1], line_no, "valence")};
        check_range(e.valence, -4.0, 4.0, line_no, "valence");
        if (!lex.word_index_.emplace(e.word, lex.valence_.size()).second) {
          throw Error(ErrorCode::DuplicateWord, "duplicate word '" + e.word + "'", line_no, e.word);
        }
        lex.valence_.push_back(std::move(e));
        break;
      }
      case LexiconKind::pattern: {
        auto f = fields_of(line, 5, line_no);
        PatternEntry e;
        e.word = checked_word(f[0], line_no);
        e.polarity = parse_real(f[1], line_no, "polarity");
        e.subjectivity = parse_real(f[2], line_no, "subjectivity");
        auto flag = text::trim(f[3]);
        if (flag == "1" || flag == "true") {
          e.is_intensifier = true;
        } else if (flag != "0" && flag != "false") {
          throw Error(ErrorCode::MalformedEntry, "bad intensifier flag '" + std::string(flag) + "'",
                      line_no);
        }
        e.intensity_factor = parse_real(f[4], line_no, "intensity factor");
        check_range(e.polarity, -1.0, 1.0, line_no, "polarity");
        check_range(e.subjectivity, 0.0, 1.0, line_no, "subjectivity");
        if (!(e.intensity_factor > 0.0)) {
          throw Error(ErrorCode::OutOfRangeScore, "intensity factor must be positive", line_no);
        }
        if (!lex.word_index_.emplace(e.word, lex.pattern_.size()).second) {
          throw Error(ErrorCode::DuplicateWord, "duplicate word '" + e.word + "'", line_no, e.word);
        }
        lex.pattern_.push_back(std::move(e));
        break;
      }
      case LexiconKind::synset: {
        auto f = fields_of(line, 6, line_no);
        SynsetEntry e;
        e.synset_id = std::string(text::trim(f[0]));
        if (e.synset_id.empty()) {
          throw Error(ErrorCode::MalformedEntry, "empty synset id", line_no);
        }
        auto pos = parse_pos_tag(text::trim(f[1]));
        if (!pos) {
          throw Error(ErrorCode::MalformedEntry, "bad pos tag '" + std::string(f[1]) + "'", line_no);
        }
        e.pos = *pos;
        e.pos_score = parse_real(f[2], line_no, "pos_score");
        e.neg_score = parse_real(f[3], line_no, "neg_score");
        check_range(e.pos_score, 0.0, 1.0, line_no, "pos_score");
        check_range(e.neg_score, 0.0, 1.0, line_no, "neg_score");
        if (e.pos_score + e.neg_score > 1.0) {
          throw Error(ErrorCode::MalformedEntry, "pos_score + neg_score exceeds 1", line_no);
        }
        auto rank_s = text::trim(f[4]);
        auto [ptr, ec] = std::from_chars(rank_s.data(), rank_s.data() + rank_s.size(), e.sense_rank);
        if (rank_s.empty() || ec != std::errc() || ptr != rank_s.data() + rank_s.size() ||
            e.sense_rank < 1) {
          throw Error(ErrorCode::MalformedEntry, "sense rank must be a positive integer", line_no);
        }
        for (auto l : text::split(f[5], ',')) e.lemmas.push_back(checked_word(l, line_no));
        if (!synset_ids.insert(e.synset_id).second) {
          throw Error(ErrorCode::DuplicateWord, "duplicate synset id '" + e.synset_id + "'",
                      line_no, e.synset_id);
        }
        for (const auto& l : e.lemmas) {
          if (!ranks.insert(sense_key(l, e.pos) + '\t' + std::to_string(e.sense_rank)).second) {
            throw Error(ErrorCode::MalformedEntry,
                        "sense rank " + std::to_string(e.sense_rank) + " repeated for '" + l +
                            "' (" + std::string(to_string(e.pos)) + ")",
                        line_no, l);
          }
        }
        lex.synsets_.push_back(std::move(e));
        break;
      }
    }
  }
  if (kind == LexiconKind::synset) lex.index_synsets();
  return lex;
}

void Lexicon::index_synsets() {
  for (const auto& s : synsets_) {
    for (const auto& l : s.lemmas) sense_index_[sense_key(l, s.pos)].push_back(&s);
  }
  for (auto& [key, senses] : sense_index_) {
    std::stable_sort(senses.begin(), senses.end(), [](const SynsetEntry* a, const SynsetEntry* b) {
      return a->sense_rank < b->sense_rank;
    });
  }
}

std::size_t Lexicon::entry_count() const noexcept {
  switch (kind_) {
    case LexiconKind::valence: return valence_.size();
    case LexiconKind::pattern: return pattern_.size();
    case LexiconKind::synset: return synsets_.size();
  }
  return 0;
}

void Lexicon::require(LexiconKind k) const {
  if (kind_ != k) {
    throw Error(ErrorCode::WrongKind, "expected a " + std::string(to_string(k)) +
                                          " lexicon, got " + std::string(to_string(kind_)));
  }
}

std::optional<double> Lexicon::lookup_valence(std::string_view word) const {
  require(LexiconKind::valence);
  auto it = word_index_.find(std::string(word));
  if (it == word_index_.end()) return std::nullopt;
  return valence_[it->second].valence;
}

const PatternEntry* Lexicon::lookup_pattern(std::string_view word) const {
  require(LexiconKind::pattern);
  auto it = word_index_.find(std::string(word));
  return it == word_index_.end() ? nullptr : &pattern_[it->second];
}

const std::vector<const SynsetEntry*>& Lexicon::lookup_synsets(std::string_view lemma,
                                                                PosTag pos) const {
  static const std::vector<const SynsetEntry*> kNone;
  require(LexiconKind::synset);
  auto it = sense_index_.find(sense_key(lemma, pos));
  return it == sense_index_.end() ? kNone : it->second;
}

std::optional<double> lookup_valence(const Lexicon& lexicon, std::string_view word) {
  return lexicon.lookup_valence(word);
}

const PatternEntry* lookup_pattern(const Lexicon& lexicon, std::string_view word) {
  return lexicon.lookup_pattern(word);
}

const std::vector<const SynsetEntry*>& lookup_synsets(const Lexicon& lexicon,
                                                      std::string_view lemma, PosTag pos) {
  return lexicon.lookup_synsets(lemma, pos);
}

}  // namespace opinion
