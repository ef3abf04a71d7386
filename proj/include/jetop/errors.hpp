#pragma once

#include <stdexcept>
#include <string>

namespace jetop {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Objects of mismatched ambient dimension were combined.
struct DimensionError : Error {
  using Error::Error;
};

/// Jets with different base points or truncation orders were combined.
struct AlignmentError : Error {
  using Error::Error;
};

/// A derivative beyond a function's declared smoothness class was requested.
struct SmoothnessError : Error {
  using Error::Error;
};

/// A function failed a required vanishing-to-order precondition.
struct FlatnessError : Error {
  using Error::Error;
};

/// A degree-0 homogeneous function was evaluated at the origin.
struct ApexError : Error {
  using Error::Error;
};

/// Sphere caps do not cover the sphere.
struct CoverageError : Error {
  using Error::Error;
};

/// A black-box evaluation failed; carries the offending probe.
struct ProbeError : Error {
  using Error::Error;
};

/// Invalid argument combination.
struct ParameterError : Error {
  using Error::Error;
};

/// A piecewise function was differentiated past its smoothness class at a
/// breakpoint. Deliberately catchable: hitting it is itself a classification
/// signal.
struct UndefinedDerivativeError : Error {
  using Error::Error;
};

/// An exact verdict was requested from inexact (sampled) data.
struct InconclusiveError : Error {
  using Error::Error;
};

/// Evaluation outside the domain covered by sampled data.
struct DomainError : Error {
  using Error::Error;
};

}  // namespace jetop
