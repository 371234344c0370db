#pragma once

#include <stdexcept>
#include <string>

namespace cg4 {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownElement : public Error {
 public:
  explicit UnknownElement(const std::string& what) : Error("unknown element: " + what) {}
};

class GroundSetTooLarge : public Error {
 public:
  GroundSetTooLarge(std::size_t n, std::size_t bound)
      : Error("ground set of " + std::to_string(n) + " elements exceeds bound " +
              std::to_string(bound)) {}
};

class MalformedTriangle : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cg4
