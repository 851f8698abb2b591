#pragma once

#include <stdexcept>
#include <string>

namespace ribbonforge {

enum class ErrorCode {
  DegenerateVertex,
  NoFoldNeeded,
  ParameterError,
  InvalidDiagram,
  EmptyDiagram,
  LedgerError,
  GenericityError,
  ComponentError,
  TooLarge,
  FormatError,
};

const char* error_code_name(ErrorCode code);

class RibbonError : public std::runtime_error {
 public:
  RibbonError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ribbonforge
