#pragma once

#include <stdexcept>
#include <string>

namespace fas {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: out-of-range ids, bad JSON, invalid
/// orientations, size mismatches.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A move that is not legal in the state it is applied to.
class MoveError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded before an answer was known.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// The gadget compiler produced something that does not behave as built,
/// e.g. a local search failed to realize an NCL flip.
class ReductionDefect : public Error {
 public:
  using Error::Error;
};

}  // namespace fas
