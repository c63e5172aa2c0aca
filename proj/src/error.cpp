#include "opinion/error.hpp"

namespace opinion {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FileNotReadable: return "FileNotReadable";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::EmptyText: return "EmptyText";
    case ErrorCode::MalformedEntry: return "MalformedEntry";
    case ErrorCode::OutOfRangeScore: return "OutOfRangeScore";
    case ErrorCode::DuplicateWord: return "DuplicateWord";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::MixedEngines: return "MixedEngines";
    case ErrorCode::MissingSubjectivity: return "MissingSubjectivity";
    case ErrorCode::OutputNotWritable: return "OutputNotWritable";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line,
             std::string subject)
    : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + message : message),
      code_(code),
      line_(line),
      subject_(std::move(subject)) {}

}  // namespace opinion
