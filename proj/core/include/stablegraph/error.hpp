#pragma once

#include <stdexcept>
#include <string>

namespace stablegraph {

// Failure categories map onto CLI exit codes (parse -> 2, invalid -> 3).
enum class ErrorKind {
  Parse,
  InvalidGraph,
  Precondition,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class InvalidGraphError : public Error {
 public:
  explicit InvalidGraphError(const std::string& what)
      : Error(ErrorKind::InvalidGraph, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::Precondition, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::Internal, what) {}
};

}  // namespace stablegraph
