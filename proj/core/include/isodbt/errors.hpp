#ifndef ISODBT_ERRORS_HPP
#define ISODBT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isodbt {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad chain text, bad parameters, division by zero, ...
struct InvalidArgument : Error {
  using Error::Error;
};

// A mathematical precondition was violated (seed existence, coincident
// energies, dependent seed set, inadmissible chain passed where an
// admissible one is required).
struct ConstraintViolation : Error {
  using Error::Error;
};

// An internal cross-check that must hold by construction failed.  Seeing
// this exception means a bug, not a user error.
struct InternalCheckFailure : Error {
  using Error::Error;
};

}  // namespace isodbt

#endif
