#ifndef BDG_ERROR_HPP_
#define BDG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace bdg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Raised when a group is too large to enumerate under the active bound.
struct EnumerationError : Error {
  using Error::Error;
};

/// Raised on conditions that indicate a bug rather than bad input, e.g. the
/// eigenspace splitting failing to terminate with a valid prime.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace bdg

#endif  // BDG_ERROR_HPP_
