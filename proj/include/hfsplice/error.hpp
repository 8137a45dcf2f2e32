#pragma once

#include <stdexcept>
#include <string>

namespace hfs {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad syntax, unknown ids, wrong shapes.
class InputError : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant does not hold (d^2 != 0, non-chain map, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace hfs
