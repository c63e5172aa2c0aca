#include "opinion/preprocess.hpp"

#include "json.hpp"
#include "opinion/error.hpp"
#include "opinion/porter.hpp"
#include "opinion/text.hpp"

namespace opinion {

namespace {

bool starts_with_url(std::string_view w) {
  return w.starts_with("http://") || w.starts_with("https://") || w.starts_with("www.");
}

bool ends_with(std::string_view s, std::string_view suffix) { return s.ends_with(suffix); }

// Yields the non-comment lines of a resource file with CR stripped.
template <typename Fn>
void for_each_data_line(std::string_view content, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    auto line = content.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    fn(line_no, line);
  }
}

bool undouble(std::string_view stem) {
  if (stem.size() < 2) return false;
  char a = stem[stem.size() - 1];
  char b = stem[stem.size() - 2];
  return a == b && text::is_lower(a) && a != 'l' && a != 's' && a != 'z' &&
         std::string_view("aeiou").find(a) == std::string_view::npos;
}

}  // namespace

StopwordList parse_stopwords(std::string_view content) {
  StopwordList out;
  for_each_data_line(content, [&](std::size_t, std::string_view line) {
    auto w = text::trim(line);
    if (!w.empty()) out.emplace(w);
  });
  return out;
}

StopwordList load_stopwords(const std::filesystem::path& path) {
  return parse_stopwords(text::read_file(path));
}

std::string normalize(std::string_view text, std::string_view punctuation) {
  std::string out;
  for (const auto& word : text::split_ws(text::lower(text))) {
    if (starts_with_url(word)) continue;
    std::string kept;
    for (char c : word) {
      if (c == '#' || punctuation.find(c) != std::string_view::npos) continue;
      kept.push_back(c);
    }
    if (kept.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += kept;
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) { return text::split_ws(text); }

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordList& stopwords) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stopwords.contains(t)) out.push_back(t);
  }
  return out;
}

Lemmatizer Lemmatizer::parse(std::string_view content) {
  Lemmatizer lem;
  std::unordered_map<std::string, std::size_t> key_line;
  for_each_data_line(content, [&](std::size_t line_no, std::string_view line) {
    auto fields = text::split(line, '\t');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorCode::MalformedEntry, "expected inflected<TAB>lemma", line_no);
    }
    std::string key(fields[0]);
    if (!lem.table_.emplace(key, std::string(fields[1])).second) {
      throw Error(ErrorCode::DuplicateWord, "duplicate inflected form '" + key + "'", line_no, key);
    }
    key_line[key] = line_no;
  });
  for (const auto& [key, lemma] : lem.table_) {
    auto it = lem.table_.find(lemma);
    if (it != lem.table_.end() && it->second != lemma) {
      throw Error(ErrorCode::MalformedEntry,
                  "lemma '" + lemma + "' is itself mapped to '" + it->second + "'",
                  key_line[key], key);
    }
    lem.headwords_.insert(lemma);
  }
  return lem;
}

Lemmatizer Lemmatizer::load(const std::filesystem::path& path) {
  return parse(text::read_file(path));
}

std::string Lemmatizer::through_table(std::string candidate) const {
  auto it = table_.find(candidate);
  return it == table_.end() ? candidate : it->second;
}

std::string Lemmatizer::noun_rules(std::string_view t) const {
  std::string s(t);
  if (s.size() <= 3) return s;
  if (ends_with(s, "ss") || ends_with(s, "us") || ends_with(s, "is")) return s;
  if (ends_with(s, "ies") && s.size() > 4) return s.substr(0, s.size() - 3) + "y";
  if (ends_with(s, "sses")) return s.substr(0, s.size() - 2);
  if (ends_with(s, "ches") || ends_with(s, "shes") || ends_with(s, "xes")) {
    return s.substr(0, s.size() - 2);
  }
  if (ends_with(s, "s")) return s.substr(0, s.size() - 1);
  return s;
}

std::string Lemmatizer::verb_rules(std::string_view t) const {
  std::string s(t);
  if (ends_with(s, "ied") && s.size() > 4) return s.substr(0, s.size() - 3) + "y";
  std::string_view stem;
  if (ends_with(s, "ing") && s.size() > 5) {
    stem = std::string_view(s).substr(0, s.size() - 3);
  } else if (ends_with(s, "ed") && s.size() > 4) {
    stem = std::string_view(s).substr(0, s.size() - 2);
  } else {
    return noun_rules(s);
  }
  if (undouble(stem)) stem.remove_suffix(1);
  return std::string(stem);
}

std::string Lemmatizer::lemmatize(std::string_view token, std::optional<PosTag> hint) const {
  std::string tok(token);
  if (auto it = table_.find(tok); it != table_.end()) return it->second;
  if (headwords_.contains(tok)) return tok;
  switch (hint.value_or(PosTag::noun)) {
    case PosTag::noun: return through_table(noun_rules(tok));
    case PosTag::verb: return through_table(verb_rules(tok));
    case PosTag::adj:
    case PosTag::adv: return tok;
  }
  return tok;
}

std::string_view to_string(DropReason r) noexcept {
  switch (r) {
    case DropReason::none: return "none";
    case DropReason::null_text: return "null";
    case DropReason::too_short: return "too_short";
  }
  return "none";
}

CleanedDocument preprocess_comment(const Comment& comment, const PreprocessConfig& config,
                                   const Lemmatizer& lemmatizer) {
  CleanedDocument doc;
  doc.comment_id = comment.id;
  doc.raw_text = comment.text;
  if (!comment.text || comment.text->empty()) {
    doc.reason = DropReason::null_text;
    return doc;
  }
  auto tokens = remove_stopwords(tokenize(normalize(*comment.text, config.punctuation)),
                                 config.stopwords);
  if (config.apply_lemmatization) {
    for (auto& t : tokens) {
      // A lemma that lands on a stopword (e.g. "us" from a plural rule) keeps
      // the surface form, so a second pass sees the same tokens.
      auto lemma = lemmatizer.lemmatize(t);
      if (!config.stopwords.contains(lemma)) t = std::move(lemma);
    }
  }
  if (config.apply_stemming) {
    for (auto& t : tokens) t = porter_stem(t);
  }
  doc.tokens = std::move(tokens);
  if (doc.tokens.size() < config.min_token_count) doc.reason = DropReason::too_short;
  return doc;
}

std::vector<CleanedDocument> preprocess_corpus(const CommentCollection& collection,
                                               const PreprocessConfig& config,
                                               const Lemmatizer& lemmatizer) {
  std::vector<CleanedDocument> out;
  out.reserve(collection.record_count());
  for (const auto& c : collection) out.push_back(preprocess_comment(c, config, lemmatizer));
  return out;
}

std::string cleaned_to_jsonl(const CleanedDocument& doc) {
  nlohmann::json obj;
  obj["dropped"] = doc.dropped();
  obj["id"] = doc.comment_id;
  obj["raw_text"] = doc.raw_text ? nlohmann::json(*doc.raw_text) : nlohmann::json(nullptr);
  obj["reason"] = doc.dropped() ? nlohmann::json(std::string(to_string(doc.reason)))
                                : nlohmann::json(nullptr);
  obj["tokens"] = doc.tokens;
  return obj.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace opinion
