#pragma once

#include <stdexcept>
#include <string>

namespace ppcd {

/// Caller supplied arguments outside an operation's domain.
class precondition_error : public std::invalid_argument {
 public:
  precondition_error(std::string kind, const std::string& what)
      : std::invalid_argument(what), kind_(std::move(kind)) {}

  /// Short machine-readable tag, e.g. "not-prime" or "node-out-of-diagram".
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// An internal identity failed (inexact hook division, negative valuation,
/// non-integral degree). Always indicates a bug or a false mathematical claim.
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a closed form evaluates to a non-integer.
class non_integral_error : public invariant_error {
 public:
  using invariant_error::invariant_error;
};

}  // namespace ppcd
