#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringnc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A desk-scale guard (size, range, search budget) was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// An argument violated an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed; `offset()` is the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ringnc
