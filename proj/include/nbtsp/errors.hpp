#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbtsp {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A force/potential evaluation left the representable range.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, double r) : Error(what), r(r) {}
  double r;
};

// Shape parameters that do not describe a valid force function (e.g. L >= r_min).
class InvalidShapeError : public Error {
 public:
  using Error::Error;
};

// Requested decay target lies outside the attainable interval.
class InfeasibleTargetError : public Error {
 public:
  using Error::Error;
};

// Root solver ran out of iterations; carries the last bracket.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : Error(what), bracket_lo(lo), bracket_hi(hi) {}
  double bracket_lo;
  double bracket_hi;
};

class UnsupportedExponentError : public Error {
 public:
  using Error::Error;
};

// Malformed input text; line is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
  std::size_t line;
};

// Structurally inconsistent data (bad permutation, mismatched sizes, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Instance too large for the requested exact algorithm.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Two particles collapsed onto each other; the pair force is undefined.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, int i, int j) : Error(what), i(i), j(j) {}
  int i;
  int j;
};

// Integration produced a non-finite position or velocity.
class NumericalBlowupError : public Error {
 public:
  NumericalBlowupError(const std::string& what, std::size_t step, double max_force)
      : Error(what), step(step), max_force(max_force) {}
  std::size_t step;
  double max_force;
};

// A particle sits exactly on the extraction origin; its angle is undefined.
class DegenerateAngleError : public Error {
 public:
  using Error::Error;
};

}  // namespace nbtsp
