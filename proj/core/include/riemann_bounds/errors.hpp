#pragma once

#include <stdexcept>
#include <string>

namespace riemann_bounds {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a type invariant (non-positive density, depth, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class InvalidBracket : public Error {
 public:
  using Error::Error;
};

class DegeneratePoints : public Error {
 public:
  using Error::Error;
};

class ZeroMaxSpeed : public Error {
 public:
  using Error::Error;
};

class UnsupportedEstimator : public Error {
 public:
  using Error::Error;
};

/// Riemann data whose solution contains a vacuum, dry bed or collapsed
/// vessel. The solvers reject such data instead of solving it.
class PhysicalDataError : public Error {
 public:
  using Error::Error;
};

class VacuumData : public PhysicalDataError {
 public:
  using PhysicalDataError::PhysicalDataError;
};

class DryBed : public PhysicalDataError {
 public:
  using PhysicalDataError::PhysicalDataError;
};

class CollapseData : public PhysicalDataError {
 public:
  using PhysicalDataError::PhysicalDataError;
};

}  // namespace riemann_bounds
