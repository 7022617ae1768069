#include "ocelf/error.hpp"

namespace ocelf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kSchema: return "SchemaError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kUnknownEvent: return "UnknownEvent";
    case ErrorCode::kUnknownObject: return "UnknownObject";
    case ErrorCode::kUnknownType: return "UnknownType";
    case ErrorCode::kUnknownExecution: return "UnknownExecution";
    case ErrorCode::kNotInExecution: return "NotInExecution";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kUnsupportedSpec: return "UnsupportedSpec";
  }
  return "Error";
}

}  // namespace ocelf
