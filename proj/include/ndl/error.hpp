#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ndl {

enum class ErrorKind {
  InvalidParameters,
  GenerationTimeout,
  ParseError,
  DuplicateEdge,
  SelfLoop,
  IndexOutOfRange,
  NotRegular,
  EmptySet,
  SetsTooSmall,
  SetsNotDisjoint,
  TooLarge,
  OddN,
  KOutOfRange,
  MOutOfRange,
  NotAHamiltonCycle,
  InvalidPath,
  InvalidTwoFactor,
  InconsistentTrace,
};

std::string_view to_string(ErrorKind kind);

// All precondition and input failures surface as ndl::Error; the kind
// names the failed contract so callers (and the CLI) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ndl
