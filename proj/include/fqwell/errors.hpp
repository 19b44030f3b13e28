#pragma once

#include <stdexcept>
#include <string>

namespace fqwell {

// Value outside the physical domain of an operation (E >= U, level index
// beyond the spectrum, unconverged level handed to the matcher, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed argument or configuration: bad well parameters, bad grid, bad range.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Root finder ran out of iterations on a bracket that should always converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EigenSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fqwell
