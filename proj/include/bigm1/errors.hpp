#ifndef BIGM1_ERRORS_HPP
#define BIGM1_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bigm1 {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rational string could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& text, std::size_t position, const std::string& why)
      : Error("cannot parse '" + text + "' at position " + std::to_string(position) + ": " + why),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A Laurent polynomial with nonzero negative-power terms was used where a
/// polynomial is required.
class SingularResidue : public Error {
 public:
  using Error::Error;
};

/// A denominator of a closed-form coefficient vanishes at these parameters.
class DegenerateParams : public Error {
 public:
  using Error::Error;
};

/// Weight exponents (alpha-1)/2, (beta-1)/2 are not nonnegative integers.
class NotPolynomialRegime : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Christoffel transform node is a zero of some P_n.
class ZeroAtNode : public Error {
 public:
  using Error::Error;
};

/// Exact division left a remainder. Indicates a bug, never bad input.
class NonzeroRemainder : public Error {
 public:
  using Error::Error;
};

class PositivityViolation : public Error {
 public:
  using Error::Error;
};

class EigenFailure : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, double achieved) : Error(what), achieved_(achieved) {}
  double achieved_relative_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace bigm1

#endif  // BIGM1_ERRORS_HPP
