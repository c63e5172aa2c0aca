#include "opinion/report.hpp"

#include "opinion/corpus.hpp"
#include "opinion/error.hpp"
#include "opinion/text.hpp"

namespace opinion {

using nlohmann::json;

namespace {

void emit(const json& v, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string end(static_cast<std::size_t>(2 * depth), ' ');
  switch (v.type()) {
    case json::value_t::null: out += "null"; return;
    case json::value_t::boolean: out += v.get<bool>() ? "true" : "false"; return;
    case json::value_t::number_integer: out += std::to_string(v.get<std::int64_t>()); return;
    case json::value_t::number_unsigned: out += std::to_string(v.get<std::uint64_t>()); return;
    case json::value_t::number_float: out += text::format_real(v.get<double>()); return;
    case json::value_t::string:
      out += v.dump(-1, ' ', false, json::error_handler_t::replace);
      return;
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {  // std::map keeps keys sorted
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += json(it.key()).dump(-1, ' ', false, json::error_handler_t::replace);
        out += ": ";
        emit(it.value(), depth + 1, out);
      }
      out += "\n" + end + "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        emit(e, depth + 1, out);
      }
      out += "\n" + end + "]";
      return;
    }
    case json::value_t::binary:
    case json::value_t::discarded: break;
  }
  throw Error(ErrorCode::PreconditionViolation, "value cannot be written as report JSON");
}

json proportions_json(const Proportions& p) {
  return {{"negative", p.negative}, {"neutral", p.neutral}, {"positive", p.positive}};
}

json label_map_json(const DistributionReport& d, bool proportions) {
  json o = json::object();
  for (auto l : {PolarityLabel::negative, PolarityLabel::neutral, PolarityLabel::positive}) {
    if (proportions) {
      o[std::string(to_string(l))] = d.proportion(l);
    } else {
      o[std::string(to_string(l))] = d.count(l);
    }
  }
  return o;
}

PolarityLabel label_of(const json& j) {
  auto l = parse_label(j.get<std::string>());
  if (!l) throw Error(ErrorCode::MalformedRecord, "unknown label '" + j.get<std::string>() + "'");
  return *l;
}

std::optional<double> optional_real(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

PolarityLabel CommentRow::label(Engine e) const noexcept {
  switch (e) {
    case Engine::pattern_avg: return pattern_label;
    case Engine::synset: return synset_label;
    case Engine::valence_rule: return valence_label;
  }
  return valence_label;
}

double CommentRow::polarity(Engine e) const noexcept {
  switch (e) {
    case Engine::pattern_avg: return pattern_polarity;
    case Engine::synset: return synset_polarity;
    case Engine::valence_rule: return valence_polarity;
  }
  return valence_polarity;
}

std::string emit_json(const json& value) {
  std::string out;
  emit(value, 0, out);
  return out;
}

json report_to_json(const AnalysisReport& r) {
  json comments = json::array();
  for (const auto& c : r.comments) {
    comments.push_back({
        {"id", c.id},
        {"pattern_avg",
         {{"label", to_string(c.pattern_label)},
          {"polarity", c.pattern_polarity},
          {"subjectivity", c.pattern_subjectivity}}},
        {"synset", {{"label", to_string(c.synset_label)}, {"polarity", c.synset_polarity}}},
        {"token_count", c.token_count},
        {"valence_rule",
         {{"label", to_string(c.valence_label)},
          {"polarity", c.valence_polarity},
          {"proportions", proportions_json(c.valence_proportions)}}},
    });
  }

  json distributions = json::object();
  json rankings = json::object();
  for (Engine e : kEngines) {
    const auto& d = r.distribution(e);
    distributions[std::string(to_string(e))] = {{"counts", label_map_json(d, false)},
                                                {"proportions", label_map_json(d, true)}};
    json sides = json::object();
    for (Side s : kSides) {
      json entries = json::array();
      for (const auto& [word, count] : r.ranking(e, s).entries) {
        entries.push_back({{"count", count}, {"word", word}});
      }
      sides[std::string(to_string(s))] = entries;
    }
    rankings[std::string(to_string(e))] = sides;
  }

  json dropped = json::array();
  for (const auto& d : r.dropped) dropped.push_back({{"id", d.id}, {"reason", d.reason}});

  const auto& h = r.subjectivity;
  json subjectivity = {
      {"bin_edges", h.bin_edges},
      {"counts", h.counts},
      {"mean", h.mean ? json(*h.mean) : json(nullptr)},
      {"median", h.median ? json(*h.median) : json(nullptr)},
  };

  const auto& m = r.meta;
  json meta = {
      {"config_digest", m.config_digest},
      {"corpus_size", m.corpus_size},
      {"disambiguation", m.disambiguation},
      {"dropped", m.dropped},
      {"epsilon", m.epsilon},
      {"histogram_bins", m.histogram_bins},
      {"kept", m.kept},
      {"mode", m.mode},
      {"top_n", m.top_n},
  };

  return {
      {"comments", comments},         {"distributions", distributions}, {"dropped", dropped},
      {"meta", meta},                 {"rankings", rankings},           {"subjectivity", subjectivity},
  };
}

std::string report_json_text(const AnalysisReport& report) {
  return emit_json(report_to_json(report)) + "\n";
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  const auto& m = j.at("meta");
  r.meta.config_digest = m.at("config_digest").get<std::string>();
  r.meta.corpus_size = m.at("corpus_size").get<std::size_t>();
  r.meta.kept = m.at("kept").get<std::size_t>();
  r.meta.dropped = m.at("dropped").get<std::size_t>();
  r.meta.mode = m.at("mode").get<std::string>();
  r.meta.disambiguation = m.at("disambiguation").get<std::string>();
  r.meta.epsilon = m.at("epsilon").get<double>();
  r.meta.histogram_bins = m.at("histogram_bins").get<std::size_t>();
  r.meta.top_n = m.at("top_n").get<std::size_t>();

  for (const auto& c : j.at("comments")) {
    CommentRow row;
    row.id = c.at("id").get<std::string>();
    row.token_count = c.at("token_count").get<std::size_t>();
    const auto& v = c.at("valence_rule");
    row.valence_polarity = v.at("polarity").get<double>();
    row.valence_label = label_of(v.at("label"));
    const auto& p = v.at("proportions");
    row.valence_proportions = {p.at("positive").get<double>(), p.at("neutral").get<double>(),
                               p.at("negative").get<double>()};
    const auto& pa = c.at("pattern_avg");
    row.pattern_polarity = pa.at("polarity").get<double>();
    row.pattern_subjectivity = pa.at("subjectivity").get<double>();
    row.pattern_label = label_of(pa.at("label"));
    const auto& sy = c.at("synset");
    row.synset_polarity = sy.at("polarity").get<double>();
    row.synset_label = label_of(sy.at("label"));
    r.comments.push_back(std::move(row));
  }

  for (Engine e : kEngines) {
    auto& d = r.distributions[static_cast<int>(e)];
    d.engine = e;
    const auto& counts = j.at("distributions").at(std::string(to_string(e))).at("counts");
    for (auto l : {PolarityLabel::negative, PolarityLabel::neutral, PolarityLabel::positive}) {
      d.counts[static_cast<int>(l)] = counts.at(std::string(to_string(l))).get<std::size_t>();
    }
    for (Side s : kSides) {
      auto& w = r.rankings[static_cast<int>(e)][static_cast<int>(s)];
      w.engine = e;
      w.side = s;
      for (const auto& entry :
           j.at("rankings").at(std::string(to_string(e))).at(std::string(to_string(s)))) {
        w.entries.emplace_back(entry.at("word").get<std::string>(),
                               entry.at("count").get<std::size_t>());
      }
    }
  }

  for (const auto& d : j.at("dropped")) {
    r.dropped.push_back({d.at("id").get<std::string>(), d.at("reason").get<std::string>()});
  }

  const auto& h = j.at("subjectivity");
  r.subjectivity.bin_edges = h.at("bin_edges").get<std::vector<double>>();
  r.subjectivity.counts = h.at("counts").get<std::vector<std::size_t>>();
  r.subjectivity.mean = optional_real(h.at("mean"));
  r.subjectivity.median = optional_real(h.at("median"));
  return r;
}

AnalysisReport parse_report(std::string_view json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::MalformedRecord, "report is not a JSON object");
  }
  try {
    return report_from_json(j);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedRecord, std::string("report is incomplete: ") + e.what());
  }
}

std::string comments_csv(const AnalysisReport& r) {
  std::string out =
      "id,token_count,valence_rule_polarity,valence_rule_label,valence_rule_positive,"
      "valence_rule_neutral,valence_rule_negative,pattern_avg_polarity,pattern_avg_subjectivity,"
      "pattern_avg_label,synset_polarity,synset_label\n";
  for (const auto& c : r.comments) {
    out += csv_escape(c.id);
    out += ',' + std::to_string(c.token_count);
    out += ',' + text::format_real(c.valence_polarity);
    out += ',' + std::string(to_string(c.valence_label));
    out += ',' + text::format_real(c.valence_proportions.positive);
    out += ',' + text::format_real(c.valence_proportions.neutral);
    out += ',' + text::format_real(c.valence_proportions.negative);
    out += ',' + text::format_real(c.pattern_polarity);
    out += ',' + text::format_real(c.pattern_subjectivity);
    out += ',' + std::string(to_string(c.pattern_label));
    out += ',' + text::format_real(c.synset_polarity);
    out += ',' + std::string(to_string(c.synset_label));
    out += '\n';
  }
  return out;
}

std::string ranking_csv(const WordRanking& ranking) {
  std::string out = "rank,word,count\n";
  std::size_t rank = 0;
  for (const auto& [word, count] : ranking.entries) {
    out += std::to_string(++rank) + ',' + csv_escape(word) + ',' + std::to_string(count) + '\n';
  }
  return out;
}

}  // namespace opinion
