#pragma once

#include <stdexcept>
#include <string>

namespace gabor {

// Invalid arguments: non-positive parameters, densities without a frame, etc.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidDensity : public DomainError {
 public:
  using DomainError::DomainError;
};

// The requested quantity has no finite optimizer for this window family.
class NoOptimizer : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The derivative does not change sign across the search bracket.
class NoSignChange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An interval operation was applied outside its domain guard.
class DomainViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IncommensurableLattice : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gabor
