#ifndef REGSM_ERRORS_HPP
#define REGSM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace regsm {

/// Malformed data: bad index, inconsistent dimensions, negative weight.
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition was violated by the caller.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

/// The request is valid but exceeds what this implementation can compute
/// (typically: n too large for exhaustive enumeration).
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed (e.g. an LP vertex that should be
/// half-integral is not). Never silently recovered.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace regsm

#endif
