#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opinion {

// One social-media comment as it appeared in the input file.
struct Comment {
  std::string id;
  // Absent when the input carried an empty or null text; such comments are
  // kept at this layer and dropped by preprocessing.
  std::optional<std::string> text;
  std::optional<std::string> source_group;
  std::optional<std::string> timestamp;

  bool operator==(const Comment&) const = default;
};

enum class CorpusFormat { csv, jsonl };
enum class ParseMode { strict, lenient };

std::string_view to_string(CorpusFormat f) noexcept;
CorpusFormat parse_corpus_format(std::string_view s);

struct LoadOptions {
  ParseMode mode = ParseMode::strict;
  // When false, a record whose text is empty or null fails with EmptyText.
  bool allow_null_text = true;
};

struct SkippedRecord {
  std::size_t line = 0;
  std::string reason;

  bool operator==(const SkippedRecord&) const = default;
};

// An immutable, ordered corpus. Iteration order is file order.
struct CommentCollection {
  std::vector<Comment> comments;
  std::string source_path;
  // Records rejected in lenient mode, in file order. Always empty in strict mode.
  std::vector<SkippedRecord> skipped;

  std::size_t record_count() const noexcept { return comments.size(); }
  auto begin() const noexcept { return comments.begin(); }
  auto end() const noexcept { return comments.end(); }

  bool operator==(const CommentCollection& o) const { return comments == o.comments; }
};

// A single parsed input record. A mapped nullopt is an explicit JSON null.
using RawRecord = std::map<std::string, std::optional<std::string>, std::less<>>;

// Trims the id, keeps text verbatim, turns missing or empty optional fields
// into absent ones. Throws MissingField or EmptyText.
Comment validate_record(const RawRecord& raw, bool allow_null_text = true);

CommentCollection load_corpus(const std::filesystem::path& path, CorpusFormat format,
                              const LoadOptions& options = {});
CommentCollection parse_corpus(std::string_view content, CorpusFormat format,
                               const LoadOptions& options = {},
                               std::string source_path = "<memory>");

// Writes one JSON object per comment; optional fields are omitted when absent
// and a null text is written as null.
void write_jsonl(const CommentCollection& collection, std::ostream& out);
// Lenient-mode skip report: one {"line":N,"reason":"..."} object per line.
void write_skip_report(const std::vector<SkippedRecord>& skipped, std::ostream& out);

// RFC-4180 reader. Each row carries the physical line it started on.
struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
};
std::vector<CsvRow> parse_csv(std::string_view content);
std::string csv_escape(std::string_view field);

}  // namespace opinion
