#pragma once

#include <stdexcept>
#include <string>

namespace zerodim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in incompatible rings (different variables or orders).
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// An input violates an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed problem text. Carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A computed object failed one of its own postconditions.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// The cooperative deadline expired inside a computation.
class TimeoutError : public Error {
public:
    using Error::Error;
};

/// A sibling computation finished first. Not an Error: only the code that
/// started the race catches it.
class Cancelled : public std::exception {
public:
    const char* what() const noexcept override { return "cancelled"; }
};

}  // namespace zerodim
