#pragma once

#include <stdexcept>
#include <string>

namespace plwzw {

/// Base of every error raised by the library. Each subclass maps to one
/// failure mode of a numerical routine, so callers (and the CLI exit-code
/// table) can dispatch on type.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: dimension mismatch, out-of-range parameter, malformed input.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Kernel evaluated at a coincident point, sigma = 0 mod 2 pi.
class PoleError : public Error {
public:
  using Error::Error;
};

/// theta_1(w_alpha) vanishes: the elliptic kernel is singular at this t.
class DynamicalPoleError : public Error {
public:
  using Error::Error;
};

/// Cartan element on (or too close to) a Weyl chamber wall.
class WallError : public Error {
public:
  using Error::Error;
};

class SingularMatrixError : public Error {
public:
  using Error::Error;
};

/// Loop not invertible somewhere on the evaluation grid.
class SingularLoopError : public Error {
public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
  using Error::Error;
};

class NoConvergence : public Error {
public:
  using Error::Error;
};

/// Birkhoff factorization does not exist at this input (nontrivial partial
/// indices, i.e. the point lies outside the domain of the RH map).
class NotInDomainError : public Error {
public:
  using Error::Error;
};

/// Analytic continuation would amplify modes beyond the allowed bound.
class ConditioningError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace plwzw
