#include "opinion/corpus.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "json.hpp"
#include "opinion/error.hpp"
#include "opinion/text.hpp"

namespace opinion {

using nlohmann::json;

namespace {

constexpr std::string_view kFields[] = {"id", "text", "source_group", "timestamp"};

bool is_known_field(std::string_view name) {
  return std::find(std::begin(kFields), std::end(kFields), name) != std::end(kFields);
}

std::string_view strip_bom(std::string_view s) {
  if (s.size() >= 3 && s.substr(0, 3) == "\xEF\xBB\xBF") s.remove_prefix(3);
  return s;
}

// Collects accepted comments, enforcing id uniqueness and the strict/lenient
// policy in one place for both formats.
class Collector {
 public:
  Collector(const LoadOptions& options, std::string source) : options_(options) {
    out_.source_path = std::move(source);
  }

  void add(std::size_t line, const RawRecord& raw) {
    Comment c;
    try {
      c = validate_record(raw, options_.allow_null_text);
    } catch (const Error& e) {
      reject(line, e.what());
      return;
    }
    if (!ids_.insert(c.id).second) {
      if (options_.mode == ParseMode::strict) {
        throw Error(ErrorCode::DuplicateId, "duplicate id '" + c.id + "'", line, c.id);
      }
      out_.skipped.push_back({line, "duplicate id '" + c.id + "'"});
      return;
    }
    out_.comments.push_back(std::move(c));
  }

  void reject(std::size_t line, const std::string& reason) {
    if (options_.mode == ParseMode::strict) {
      throw Error(ErrorCode::MalformedRecord, reason, line);
    }
    out_.skipped.push_back({line, reason});
  }

  CommentCollection take() { return std::move(out_); }

 private:
  const LoadOptions& options_;
  CommentCollection out_;
  std::unordered_set<std::string> ids_;
};

void parse_csv_records(std::string_view content, Collector& sink) {
  // Quoting errors leave the rest of the file unparseable, so they stay fatal
  // even in lenient mode.
  std::vector<CsvRow> rows = parse_csv(content);
  if (rows.empty()) return;
  const auto& header = rows.front().fields;
  std::vector<std::string> names;
  for (const auto& h : header) names.emplace_back(text::trim(h));
  for (std::string_view required : {"id", "text"}) {
    if (std::find(names.begin(), names.end(), required) == names.end()) {
      throw Error(ErrorCode::MalformedRecord,
                  "header lacks required column '" + std::string(required) + "'", rows.front().line);
    }
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() == 1 && row.fields[0].empty()) continue;  // blank line
    if (row.fields.size() != names.size()) {
      sink.reject(row.line, "expected " + std::to_string(names.size()) + " fields, found " +
                                std::to_string(row.fields.size()));
      continue;
    }
    RawRecord raw;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (is_known_field(names[i])) raw[names[i]] = row.fields[i];
    }
    sink.add(row.line, raw);
  }
}

void parse_jsonl_records(std::string_view content, Collector& sink) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    auto line = content.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (text::trim(line).empty()) continue;

    json obj = json::parse(line, nullptr, false);
    if (obj.is_discarded()) {
      sink.reject(line_no, "invalid JSON");
      continue;
    }
    if (!obj.is_object()) {
      sink.reject(line_no, "record is not a JSON object");
      continue;
    }
    RawRecord raw;
    std::string bad;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (!is_known_field(it.key())) continue;
      if (it->is_null()) {
        raw[it.key()] = std::nullopt;
      } else if (it->is_string()) {
        raw[it.key()] = it->get<std::string>();
      } else {
        bad = "field '" + it.key() + "' must be a string or null";
        break;
      }
    }
    if (!bad.empty()) {
      sink.reject(line_no, bad);
      continue;
    }
    sink.add(line_no, raw);
  }
}

}  // namespace

std::string_view to_string(CorpusFormat f) noexcept {
  return f == CorpusFormat::csv ? "csv" : "jsonl";
}

CorpusFormat parse_corpus_format(std::string_view s) {
  if (s == "csv") return CorpusFormat::csv;
  if (s == "jsonl") return CorpusFormat::jsonl;
  throw Error(ErrorCode::InvalidConfig, "unknown corpus format '" + std::string(s) + "'");
}

Comment validate_record(const RawRecord& raw, bool allow_null_text) {
  auto id_it = raw.find("id");
  if (id_it == raw.end() || !id_it->second) {
    throw Error(ErrorCode::MissingField, "missing field 'id'", std::nullopt, "id");
  }
  auto text_it = raw.find("text");
  if (text_it == raw.end()) {
    throw Error(ErrorCode::MissingField, "missing field 'text'", std::nullopt, "text");
  }
  Comment c;
  c.id = std::string(text::trim(*id_it->second));
  if (c.id.empty()) {
    throw Error(ErrorCode::MissingField, "field 'id' is empty", std::nullopt, "id");
  }
  if (text_it->second && !text_it->second->empty()) {
    c.text = *text_it->second;
  } else if (!allow_null_text) {
    throw Error(ErrorCode::EmptyText, "comment '" + c.id + "' has empty text", std::nullopt, c.id);
  }
  auto optional_field = [&](std::string_view name) -> std::optional<std::string> {
    auto it = raw.find(name);
    if (it == raw.end() || !it->second || it->second->empty()) return std::nullopt;
    return *it->second;
  };
  c.source_group = optional_field("source_group");
  c.timestamp = optional_field("timestamp");
  return c;
}

std::vector<CsvRow> parse_csv(std::string_view content) {
  content = strip_bom(content);
  std::vector<CsvRow> rows;
  if (content.empty()) return rows;

  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = content.size();
  while (i < n) {
    CsvRow row;
    row.line = line;
    std::string field;
    bool row_done = false;
    while (!row_done) {
      field.clear();
      if (i < n && content[i] == '"') {
        const std::size_t quote_line = line;
        ++i;
        for (;;) {
          if (i >= n) {
            throw Error(ErrorCode::MalformedRecord, "unterminated quoted field", quote_line);
          }
          char c = content[i++];
          if (c == '"') {
            if (i < n && content[i] == '"') {
              field.push_back('"');
              ++i;
            } else {
              break;
            }
          } else {
            if (c == '\n') ++line;
            field.push_back(c);
          }
        }
        if (i < n && content[i] != ',' && content[i] != '\n' && content[i] != '\r') {
          throw Error(ErrorCode::MalformedRecord, "unexpected character after closing quote",
                      line);
        }
      } else {
        while (i < n && content[i] != ',' && content[i] != '\n' && content[i] != '\r') {
          if (content[i] == '"') {
            throw Error(ErrorCode::MalformedRecord, "quote inside unquoted field", line);
          }
          field.push_back(content[i++]);
        }
      }
      row.fields.push_back(field);
      if (i >= n) {
        row_done = true;
      } else if (content[i] == ',') {
        ++i;
      } else {
        if (content[i] == '\r') ++i;
        if (i < n && content[i] == '\n') ++i;
        ++line;
        row_done = true;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_escape(std::string_view field) {
  bool quote = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!quote) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

CommentCollection parse_corpus(std::string_view content, CorpusFormat format,
                               const LoadOptions& options, std::string source_path) {
  Collector sink(options, std::move(source_path));
  if (format == CorpusFormat::csv) {
    parse_csv_records(content, sink);
  } else {
    parse_jsonl_records(strip_bom(content), sink);
  }
  return sink.take();
}

CommentCollection load_corpus(const std::filesystem::path& path, CorpusFormat format,
                              const LoadOptions& options) {
  std::string content = text::read_file(path);
  return parse_corpus(content, format, options, path.string());
}

void write_jsonl(const CommentCollection& collection, std::ostream& out) {
  for (const auto& c : collection.comments) {
    json obj;
    obj["id"] = c.id;
    obj["text"] = c.text ? json(*c.text) : json(nullptr);
    if (c.source_group) obj["source_group"] = *c.source_group;
    if (c.timestamp) obj["timestamp"] = *c.timestamp;
    out << obj.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  }
}

void write_skip_report(const std::vector<SkippedRecord>& skipped, std::ostream& out) {
  for (const auto& s : skipped) {
    json obj;
    obj["line"] = s.line;
    obj["reason"] = s.reason;
    out << obj.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  }
}

}  // namespace opinion
