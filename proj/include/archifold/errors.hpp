#pragma once

#include <stdexcept>
#include <string>

namespace archifold {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MismatchedField : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct NotCubic : Error {
  using Error::Error;
};
struct CoincidentPoints : Error {
  using Error::Error;
};
struct ForbiddenConfiguration : Error {
  using Error::Error;
};
struct NoRealFold : Error {
  using Error::Error;
};
struct UnsupportedPair : Error {
  using Error::Error;
};
struct MissingChirality : Error {
  using Error::Error;
};
struct UnsupportedKind : Error {
  using Error::Error;
};
struct VerificationFailed : Error {
  using Error::Error;
};

}  // namespace archifold
