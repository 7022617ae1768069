#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ocelf {

enum class ErrorCode {
  kParse,
  kSchema,
  kIo,
  kUnknownEvent,
  kUnknownObject,
  kUnknownType,
  kUnknownExecution,
  kNotInExecution,
  kTypeMismatch,
  kInvalidSpec,
  kUnsupportedSpec,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code identifies the category; the
/// message names the offending entity.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed input text. Line and column are 1-based; zero when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::kParse, message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ocelf
