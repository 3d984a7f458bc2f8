#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact integer arithmetic left the checked range.
struct OverflowError : Error {
  using Error::Error;
};

// Group closure exceeded its element limit (wrong generators or wrong limit).
struct LimitExceeded : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct ActionInconsistent : Error {
  using Error::Error;
};

// A line whose projectors fail trace/idempotence checks (non-commuting triple).
struct InconsistentLine : Error {
  using Error::Error;
};

struct ConstructionFailed : Error {
  using Error::Error;
};

struct NotSteiner : Error {
  using Error::Error;
};

struct UnexpectedStructure : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace atlas
