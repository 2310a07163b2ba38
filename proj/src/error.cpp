#include "ndl/error.hpp"

namespace ndl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::GenerationTimeout: return "generation-timeout";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::DuplicateEdge: return "duplicate-edge";
    case ErrorKind::SelfLoop: return "self-loop";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::NotRegular: return "not-regular";
    case ErrorKind::EmptySet: return "empty-set";
    case ErrorKind::SetsTooSmall: return "sets-too-small";
    case ErrorKind::SetsNotDisjoint: return "sets-not-disjoint";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::OddN: return "odd-n";
    case ErrorKind::KOutOfRange: return "k-out-of-range";
    case ErrorKind::MOutOfRange: return "m-out-of-range";
    case ErrorKind::NotAHamiltonCycle: return "not-a-hamilton-cycle";
    case ErrorKind::InvalidPath: return "invalid-path";
    case ErrorKind::InvalidTwoFactor: return "invalid-two-factor";
    case ErrorKind::InconsistentTrace: return "inconsistent-trace";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace ndl
