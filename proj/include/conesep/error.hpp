#pragma once

#include <stdexcept>
#include <string>

namespace conesep {

enum class ErrorKind {
  Input,             // malformed cone / scene / dimension mismatch
  Numerical,         // solver did not converge or LP broke down
  UnsupportedScale,  // exact enumeration or oracle outside its desk-scale range
  Precondition       // mathematically required hypothesis does not hold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& what)
      : Error(ErrorKind::Numerical, what) {}
};

class UnsupportedScale : public Error {
 public:
  explicit UnsupportedScale(const std::string& what)
      : Error(ErrorKind::UnsupportedScale, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::Precondition, what) {}
};

}  // namespace conesep
