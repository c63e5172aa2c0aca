#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opinion {

// Every failure surfaced by the library carries one of these codes. The CLI
// prints them verbatim as `ERROR <code>: <message>`.
enum class ErrorCode {
  FileNotReadable,
  MalformedRecord,
  DuplicateId,
  MissingField,
  EmptyText,
  MalformedEntry,
  OutOfRangeScore,
  DuplicateWord,
  WrongKind,
  MixedEngines,
  MissingSubjectivity,
  OutputNotWritable,
  InvalidConfig,
  PreconditionViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt, std::string subject = {});

  ErrorCode code() const noexcept { return code_; }
  // 1-based input line the error refers to, when it has one.
  std::optional<std::size_t> line() const noexcept { return line_; }
  // The offending field name, id, or word, when there is one.
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
  std::string subject_;
};

}  // namespace opinion
