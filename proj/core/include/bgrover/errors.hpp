#ifndef BGROVER_ERRORS_HPP
#define BGROVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bgrover {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Register or state dimensions outside the supported envelope.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Qubit index, basis index, Hamming weight or angle outside its domain.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The rotation-angle equation has no root in the admissible bracket.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

/// An arcsin argument exceeded 1, so no real angle exists.
class InfeasibleAngleError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (gate lists, labels, angle expressions).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bgrover

#endif  // BGROVER_ERRORS_HPP
