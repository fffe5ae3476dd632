#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlgf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument or unknown name; maps to CLI usage errors.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class BackendMismatch : public Error {
 public:
  using Error::Error;
};

// Loop endpoints disagree beyond tolerance.
class EndpointMismatch : public Error {
 public:
  using Error::Error;
};

class ComposabilityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Field or complex data violates an invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Numeric tracking could not decide a lift; raise the resolution.
class LiftAmbiguityError : public Error {
 public:
  using Error::Error;
};

}  // namespace hlgf
