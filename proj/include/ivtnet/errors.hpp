#pragma once

#include <stdexcept>

namespace ivtnet {

// Base of every domain error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RadixRangeError : Error { using Error::Error; };
struct DigitRangeError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct NoMsdError : Error { using Error::Error; };
struct RuleRangeError : Error { using Error::Error; };
struct CensusRangeError : Error { using Error::Error; };
struct NotCollatzBijectiveError : Error { using Error::Error; };
struct NonConvergentError : Error { using Error::Error; };
struct NoPreimageOfZeroError : Error { using Error::Error; };
struct DesignCollisionError : Error { using Error::Error; };
struct ValidationFailedError : Error { using Error::Error; };
struct UnknownSourceError : Error { using Error::Error; };

}  // namespace ivtnet
