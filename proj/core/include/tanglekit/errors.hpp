#pragma once

#include <stdexcept>
#include <string>

namespace tanglekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class MalformedDiagram : public Error {
 public:
  using Error::Error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  using Error::Error;
};

class InvalidMoveSite : public Error {
 public:
  using Error::Error;
};

class UnsupportedStrandCount : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class EnumerationFailure : public Error {
 public:
  using Error::Error;
};

class CorpusError : public Error {
 public:
  using Error::Error;
};

}  // namespace tanglekit
