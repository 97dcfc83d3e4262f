#pragma once

#include <stdexcept>
#include <string>

namespace tempiric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A representation label does not match the atom list of its group.
class LabelError : public Error {
  public:
    using Error::Error;
};

/// Malformed group definition document.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Well-formed document whose datum violates a type invariant.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Operation requested on a group that does not support it
/// (e.g. discrete series of an unequal-rank group).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// The requested result depends on data outside the finite window.
class WindowError : public Error {
  public:
    using Error::Error;
};

/// A mathematical invariant that should hold unconditionally failed.
/// Usually signals corrupt catalog data.
class InternalError : public Error {
  public:
    using Error::Error;
};

} // namespace tempiric
