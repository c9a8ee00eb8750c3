#pragma once

#include <stdexcept>
#include <string>

namespace rsq {

/// A bounded search or enumeration was asked to go past its configured cap.
/// Distinct from "no answer exists".
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal postcondition failed. Indicates a bug or a caller passing
/// values that violate a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rsq
