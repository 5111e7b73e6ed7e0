#pragma once

#include <stdexcept>
#include <string>

namespace pcube {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad edge list, violated precondition).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configurable resource guard tripped (vertex, clique or cycle caps).
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A postcondition the library checks on itself failed.  Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcube
