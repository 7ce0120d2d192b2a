#pragma once

#include <stdexcept>
#include <string>

namespace sympdec {

/// Raised when a brute-force computation would exceed a configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a requested code path exists in the interface but not in
/// this build.
class UnimplementedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant (e.g. a character inner product that is not
/// an integer). Never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sympdec
