#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotplate {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed PD text. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Diagram fails validation (duplicate arcs, R1 curls, non-planar, split...).
class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

// Diagram is valid but outside what a given construction supports.
class UnsupportedDiagram : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotplate
