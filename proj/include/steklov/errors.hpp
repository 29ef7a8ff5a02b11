#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace steklov {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input value: angle outside (0, pi), malformed rational, bad index.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Data that does not describe a convex polygon of the requested kind.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Polynomial whose structure does not fit the requested family.
class FamilyError : public Error {
 public:
  using Error::Error;
};

class NoSolutionError : public Error {
 public:
  using Error::Error;
};

class AmbiguousError : public Error {
 public:
  AmbiguousError(std::vector<std::string> cases, const std::string& msg)
      : Error(msg), cases_(std::move(cases)) {}
  const std::vector<std::string>& cases() const { return cases_; }

 private:
  std::vector<std::string> cases_;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

class HorizonMismatch : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace steklov
