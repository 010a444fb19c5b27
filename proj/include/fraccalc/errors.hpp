#ifndef FRACCALC_ERRORS_HPP_
#define FRACCALC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fraccalc {

/// Root of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument sits on a pole of the gamma or digamma function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Parameter combination where a closed form degenerates to 0·∞.
class SingularParamError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Finite-difference stencil would cross t = 0.
class StencilError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Iterative scheme (series, quadrature ladder) ran out of budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class UnknownSuiteError : public Error {
 public:
  using Error::Error;
};

}  // namespace fraccalc

#endif  // FRACCALC_ERRORS_HPP_
