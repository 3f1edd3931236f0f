#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropt {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- algebra -------------------------------------------------------------

struct ShapeMismatch : Error {
  using Error::Error;
};

// The additive zero (bottom) has no multiplicative inverse.
struct InversionOfZero : Error {
  using Error::Error;
};

// bottom^r is defined only for r > 0.
struct UndefinedPower : Error {
  using Error::Error;
};

// Conjugate transpose of the all-bottom vector is undefined.
struct ZeroVector : Error {
  using Error::Error;
};

// Kleene star requested for a matrix with Tr(A) above the multiplicative one.
struct StarDiverges : Error {
  using Error::Error;
};

// --- solver / location ---------------------------------------------------

struct NotRegular : Error {
  using Error::Error;
};

struct DegenerateInput : Error {
  using Error::Error;
};

struct ConformanceError : Error {
  using Error::Error;
};

struct BoundsError : Error {
  using Error::Error;
};

// Constraint sets have empty intersection. Carries the worst offending
// scalar term of the feasibility condition so callers can report it.
struct Infeasible : Error {
  Infeasible(const std::string& msg, std::string term, double value)
      : Error(msg), term_label(std::move(term)), term_value(value) {}

  std::string term_label;  // e.g. "g1-h1" or "h^-1_i B*_ij g_j" indices
  double term_value = 0.0;
};

// --- oracle --------------------------------------------------------------

struct GridTooCoarse : Error {
  using Error::Error;
};

struct EmptyFeasible : Error {
  using Error::Error;
};

// --- io ------------------------------------------------------------------

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

}  // namespace tropt
