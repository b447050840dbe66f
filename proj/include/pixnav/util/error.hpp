#pragma once

#include <stdexcept>
#include <string>

namespace pixnav {

// Base for every error thrown by the library. Subclasses carry the module
// the failure came from so the CLI can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  GenerationError(const std::string& what, long long seed)
      : Error(what + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}
  long long seed() const noexcept { return seed_; }

 private:
  long long seed_;
};

class DatasetError : public Error {
 public:
  using Error::Error;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

}  // namespace pixnav
