#include "opinion/config.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "opinion/error.hpp"
#include "opinion/text.hpp"

namespace opinion {

namespace {

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view want) {
  throw Error(ErrorCode::InvalidConfig, "bad value '" + std::string(value) + "' for " +
                                            std::string(key) + " (expected " + std::string(want) +
                                            ")",
              std::nullopt, std::string(key));
}

double to_real(std::string_view key, std::string_view v) {
  double out = 0.0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || p != v.data() + v.size() || !std::isfinite(out)) {
    bad_value(key, v, "a real number");
  }
  return out;
}

long long to_int(std::string_view key, std::string_view v) {
  long long out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || p != v.data() + v.size()) bad_value(key, v, "an integer");
  return out;
}

std::size_t to_count(std::string_view key, std::string_view v) {
  long long n = to_int(key, v);
  if (n < 0) bad_value(key, v, "a non-negative integer");
  return static_cast<std::size_t>(n);
}

bool to_bool(std::string_view key, std::string_view v) {
  auto s = text::lower(v);
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  bad_value(key, v, "a boolean");
}

void require_file(const std::filesystem::path& p, std::string_view what) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(p, ec)) {
    throw Error(ErrorCode::InvalidConfig,
                std::string(what) + " '" + p.string() + "' does not exist or is not a file",
                std::nullopt, p.string());
  }
}

}  // namespace

std::filesystem::path RunConfig::valence_file() const {
  return valence_path.value_or(lexicon_dir.value_or(data_dir / "lexicons") / "valence.tsv");
}
std::filesystem::path RunConfig::pattern_file() const {
  return pattern_path.value_or(lexicon_dir.value_or(data_dir / "lexicons") / "pattern.tsv");
}
std::filesystem::path RunConfig::synset_file() const {
  return synset_path.value_or(lexicon_dir.value_or(data_dir / "lexicons") / "synset.tsv");
}
std::filesystem::path RunConfig::stopwords_file() const {
  return stopwords_path.value_or(data_dir / "stopwords.txt");
}
std::filesystem::path RunConfig::lemmas_file() const {
  return lemmas_path.value_or(data_dir / "lemmas.tsv");
}
std::filesystem::path RunConfig::pos_tags_file() const {
  return pos_tags_path.value_or(data_dir / "pos_tags.tsv");
}

void RunConfig::set(std::string_view key, std::string_view raw) {
  const std::string_view v = text::trim(raw);
  if (key == "input") {
    input = std::string(v);
  } else if (key == "format") {
    format = parse_corpus_format(v);
  } else if (key == "lenient") {
    parse_mode = to_bool(key, v) ? ParseMode::lenient : ParseMode::strict;
  } else if (key == "data_dir") {
    data_dir = std::string(v);
  } else if (key == "lexicons") {
    lexicon_dir = std::string(v);
  } else if (key == "lexicon.valence") {
    valence_path = std::string(v);
  } else if (key == "lexicon.pattern") {
    pattern_path = std::string(v);
  } else if (key == "lexicon.synset") {
    synset_path = std::string(v);
  } else if (key == "stopwords") {
    stopwords_path = std::string(v);
  } else if (key == "lemmas") {
    lemmas_path = std::string(v);
  } else if (key == "pos_tags") {
    pos_tags_path = std::string(v);
  } else if (key == "mode") {
    auto m = parse_pipeline_mode(v);
    if (!m) bad_value(key, v, "paper-faithful or engine-native");
    mode = *m;
  } else if (key == "min_tokens") {
    min_tokens = to_count(key, v);
  } else if (key == "lemmatize") {
    lemmatize = to_bool(key, v);
  } else if (key == "stem") {
    stem = to_bool(key, v);
  } else if (key == "epsilon") {
    epsilon = to_real(key, v);
  } else if (key == "top_n") {
    top_n = to_count(key, v);
  } else if (key == "histogram_bins") {
    histogram_bins = to_count(key, v);
  } else if (key == "disambiguation") {
    auto d = parse_disambiguation(v);
    if (!d) bad_value(key, v, "first_sense or average_senses");
    disambiguation = *d;
  } else if (key == "valence.negation_window") {
    valence.negation_window = static_cast<int>(to_int(key, v));
  } else if (key == "valence.negation_factor") {
    valence.negation_factor = to_real(key, v);
  } else if (key == "valence.booster_increment") {
    valence.booster_increment = to_real(key, v);
  } else if (key == "valence.caps_increment") {
    valence.caps_increment = to_real(key, v);
  } else if (key == "valence.exclamation_increment") {
    valence.exclamation_increment = to_real(key, v);
  } else if (key == "valence.max_exclamations") {
    valence.max_exclamations = static_cast<int>(to_int(key, v));
  } else if (key == "valence.but_discount") {
    valence.but_discount = to_real(key, v);
  } else if (key == "valence.but_boost") {
    valence.but_boost = to_real(key, v);
  } else if (key == "valence.alpha") {
    valence.normalization_alpha = to_real(key, v);
  } else if (key == "out") {
    out_dir = std::string(v);
  } else if (key == "plots") {
    plots = to_bool(key, v);
  } else {
    throw Error(ErrorCode::InvalidConfig, "unknown config key '" + std::string(key) + "'",
                std::nullopt, std::string(key));
  }
}

void RunConfig::validate(bool need_input) const {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::InvalidConfig, m); };
  if (top_n < 1) fail("top_n must be >= 1");
  if (min_tokens < 1) fail("min_tokens must be >= 1");
  if (histogram_bins < 1) fail("histogram_bins must be >= 1");
  if (!(epsilon >= 0.0)) fail("epsilon must be >= 0");
  valence.validate();
  if (need_input) {
    if (input.empty()) fail("no input file given");
    require_file(input, "input file");
  }
  require_file(valence_file(), "valence lexicon");
  require_file(pattern_file(), "pattern lexicon");
  require_file(synset_file(), "synset lexicon");
  require_file(stopwords_file(), "stopword list");
  require_file(lemmas_file(), "lemma table");
  require_file(pos_tags_file(), "tag table");
}

RunConfig parse_config_text(std::string_view content, RunConfig base) {
  std::size_t line_no = 0;
  for (auto line : text::split(content, '\n')) {
    ++line_no;
    line = text::trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidConfig, "expected key = value", line_no);
    }
    try {
      base.set(text::trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), line_no, e.subject());
    }
  }
  return base;
}

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base) {
  return parse_config_text(text::read_file(path), std::move(base));
}

std::string config_digest(const RunConfig& c,
                          const std::map<std::string, std::string>& resource_digests) {
  // std::map keeps the lines in key order.
  std::map<std::string, std::string> kv = {
      {"mode", std::string(to_string(c.mode))},
      {"epsilon", text::format_exact(c.epsilon)},
      {"top_n", std::to_string(c.top_n)},
      {"histogram_bins", std::to_string(c.histogram_bins)},
      {"min_tokens", std::to_string(c.min_tokens)},
      {"lemmatize", c.lemmatize ? "1" : "0"},
      {"stem", c.stem ? "1" : "0"},
      {"disambiguation", std::string(to_string(c.disambiguation))},
      {"valence.negation_window", std::to_string(c.valence.negation_window)},
      {"valence.negation_factor", text::format_exact(c.valence.negation_factor)},
      {"valence.booster_increment", text::format_exact(c.valence.booster_increment)},
      {"valence.caps_increment", text::format_exact(c.valence.caps_increment)},
      {"valence.exclamation_increment", text::format_exact(c.valence.exclamation_increment)},
      {"valence.max_exclamations", std::to_string(c.valence.max_exclamations)},
      {"valence.but_discount", text::format_exact(c.valence.but_discount)},
      {"valence.but_boost", text::format_exact(c.valence.but_boost)},
      {"valence.alpha", text::format_exact(c.valence.normalization_alpha)},
  };
  for (const auto& [k, v] : resource_digests) kv[k] = v;
  std::string lines;
  for (const auto& [k, v] : kv) lines += k + "=" + v + "\n";
  return text::digest(lines);
}

}  // namespace opinion
