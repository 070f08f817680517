#pragma once

#include <stdexcept>
#include <string>

namespace drgtight {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad intersection array, bad
/// document, wrong sequence length). CLI maps these to exit code 1.
class ValidationError : public Error {
public:
  using Error::Error;
};

class LengthError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// A computation could not proceed (vanishing denominator, wrong case,
/// degenerate spectrum). CLI maps these to exit code 2.
class ComputeError : public Error {
public:
  using Error::Error;
};

class ZeroDivision : public ComputeError {
public:
  using ComputeError::ComputeError;
};

/// A named hypothesis of the form "expression != 0" failed. `index` is the
/// sequence position involved, or -1 when the violation is positional-free.
class ZeroDenominator : public ComputeError {
public:
  ZeroDenominator(const std::string& what, int index = -1)
      : ComputeError(what), index(index) {}
  int index;
};

class IndexError : public ComputeError {
public:
  using ComputeError::ComputeError;
};

/// The operation is only defined for a different structural case of the
/// intersection array (e.g. the reduced matrix needs a_1 = ... = a_{D-2} = 0).
class WrongCase : public ComputeError {
public:
  using ComputeError::ComputeError;
};

class MismatchedDiameter : public ComputeError {
public:
  using ComputeError::ComputeError;
};

class NonRealizable : public ComputeError {
public:
  using ComputeError::ComputeError;
};

/// Two computed eigenvalues are too close to separate at the requested
/// tolerance; genuine intersection arrays always have simple spectra.
class DegenerateSpectrum : public ComputeError {
public:
  using ComputeError::ComputeError;
};

class TrivialSequence : public ComputeError {
public:
  using ComputeError::ComputeError;
};

class TrivialTheta : public ComputeError {
public:
  using ComputeError::ComputeError;
};

class NotFeasible : public ComputeError {
public:
  using ComputeError::ComputeError;
};

class InfeasibleSequence : public ComputeError {
public:
  using ComputeError::ComputeError;
};

}  // namespace drgtight
