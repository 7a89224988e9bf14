#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace morpheq {

enum class InputErrorKind {
  kInvalidLetter,
  kAlphabetMismatch,
  kEmptyWord,
  kErasingMorphism,
  kPeriodicMorphism,
  kNotMarked,
  kNotCoincidence,
  kNotFactorizable,
  kTooFewBlocks,
  kInvalidConfig,
  kMalformedInput,
};

std::string_view to_string(InputErrorKind kind);

/// Raised when a caller hands in something outside an operation's domain.
/// The CLI maps these to exit code 1.
class InputError : public std::invalid_argument {
 public:
  InputError(InputErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  InputErrorKind kind() const noexcept { return kind_; }

 private:
  InputErrorKind kind_;
};

/// Raised when a computed object fails a property that a proven theorem
/// guarantees. Any occurrence is an implementation bug; the CLI maps it to
/// exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace morpheq
