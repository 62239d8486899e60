#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace barbed {

/// Base for every error raised by the library. Callers that only care about
/// "bad input" versus "bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge-list text that does not conform to the format.
class ParseError : public Error {
 public:
  enum class Kind { Malformed, NonPositiveWeight, DuplicateEdge, SelfLoop, VertexOutOfRange };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// A graph or path system violating a structural invariant.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is not connected") {}
};

/// A size guard tripped (enumeration caps, simplex budget, ...).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A path choice function that fails the consistency condition where a
/// consistent one is required.
class InconsistentPaths : public Error {
 public:
  using Error::Error;
};

/// An operation whose stated precondition does not hold.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace barbed
