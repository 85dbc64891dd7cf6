#pragma once

#include <stdexcept>
#include <string>

namespace slowcolor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph or transcript input. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A documented precondition was violated (illegal move, dependent set, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Instance is larger than a configured search cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Solver deadline passed; memoized entries computed so far remain exact.
class SolverTimeout : public Error {
 public:
  using Error::Error;
};

// Max flow between the requested terminal sets fell short of the requested count.
class InsufficientConnectivity : public Error {
 public:
  using Error::Error;
};

}  // namespace slowcolor
