#pragma once

#include <stdexcept>
#include <string>

namespace zrc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument sits on (or within the pole radius of) a pole of the function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// The requested accuracy cannot be reached with the available parameters.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Argument lies outside the validity region of an approximation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An identity cannot be evaluated at this point: a zeta argument hits the
/// pole, a trivial zero sits in a denominator, or a denominator is too small.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Parameters do not match the arity of an identity.
class ParamError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace zrc
