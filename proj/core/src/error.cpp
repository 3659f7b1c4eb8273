#include "truncmul/error.hpp"

namespace truncmul {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::SearchSpaceExceeded: return "SearchSpaceExceeded";
    case ErrorKind::NoCandidates: return "NoCandidates";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + "(" + detail + ")"),
      kind_(kind),
      detail_(std::move(detail)) {}

}  // namespace truncmul
