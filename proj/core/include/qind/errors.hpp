#pragma once

#include <stdexcept>
#include <string>

namespace qind {

// Base for all recoverable tool errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: unknown rubric, malformed file, out-of-range value.
// The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Filesystem problems while collecting or writing artifacts.
class IoError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition (missing rating, duplicate
// verdict level, ...). Distinct from InputError: these indicate bugs in
// the calling code, not in user-supplied data.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qind
