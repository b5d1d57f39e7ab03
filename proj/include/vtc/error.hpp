#pragma once

#include <stdexcept>
#include <string>

namespace vtc {

/// Raised when caller-supplied data violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a generator or algorithm fails its own post-verification.
/// Seeing one of these means there is a bug in the library, not in the input.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vtc
