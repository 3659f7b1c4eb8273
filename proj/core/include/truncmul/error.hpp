#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace truncmul {

enum class ErrorKind {
  ConstraintViolated,
  DegenerateInput,
  IterationCapExceeded,
  SingularBasis,
  SearchSpaceExceeded,
  NoCandidates,
  OracleTooLarge,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library. `detail()` carries the
/// specific context, e.g. the violated inequality for ConstraintViolated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace truncmul
