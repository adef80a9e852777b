#pragma once

#include <stdexcept>
#include <string>

namespace ghom {

enum class ErrorCode {
  InvalidMap,
  InvalidParameter,
  UnknownVertex,
  DuplicateVertex,
  TooLarge,
  Mismatch,
  NotMorphism,
  NotAdjacent,
  EndpointMismatch,
  EmptyGraph,
  Precondition,
  InvalidFold,
  NotPrunable,
  NotHomotopic,
  Parse,
  UnknownSuite,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; `code()` lets callers
// (the CLI in particular) tell a usage problem from a mathematical one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ghom
