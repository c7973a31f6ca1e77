#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kstab {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the domain on which a quantity is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (variables, degree, pair queue) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kstab
