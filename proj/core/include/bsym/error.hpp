#pragma once

#include <stdexcept>
#include <string>

namespace bsym {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain (size bounds,
/// malformed input, mixed degrees, ...). The CLI maps this to exit code 3.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Input text or documents that cannot be parsed.
class ParseError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

}  // namespace bsym
