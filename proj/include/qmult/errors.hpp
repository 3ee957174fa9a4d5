#pragma once

// Error taxonomy. Exit-code mapping in the CLI: invalid_argument -> 1,
// CapExceededError / OverflowError -> 2, IdentityViolationError -> 3.

#include <stdexcept>
#include <string>

namespace qmult {

// Arithmetic left the checked 64-bit range.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// A requested enumeration exceeds the configured size cap.
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Two algebraically equivalent computation paths disagreed; this is a bug in
// the library or its conventions, never a user error.
struct IdentityViolationError : std::logic_error {
  explicit IdentityViolationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qmult
