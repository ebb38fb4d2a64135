#pragma once

#include <stdexcept>
#include <string>

namespace mekler {

// Base of everything the library throws on a contract violation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class ColumnMismatch : public Error {
 public:
  using Error::Error;
};

// The finite fragment cannot support the requested check (missing gadgets,
// not enough partner naturals, ...).
class InadequateFragment : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when an internal consistency check fails; indicates a bug or a
// malformed input that slipped past validation.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mekler
