#pragma once

#include <stdexcept>
#include <string>

namespace exsteer {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class GridMismatchError : public Error {
 public:
  using Error::Error;
};

class TypeMismatchError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public Error {
 public:
  using Error::Error;
};

class RegistryError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Picard iteration failed to reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_gap, int iterations)
      : Error(what), last_gap_(last_gap), iterations_(iterations) {}
  double last_gap() const { return last_gap_; }
  int iterations() const { return iterations_; }

 private:
  double last_gap_;
  int iterations_;
};

}  // namespace exsteer
