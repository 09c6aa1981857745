#pragma once

#include <stdexcept>
#include <string>

namespace sppde {

// Argument outside the domain of a mathematical function (t < 0, non-finite z, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Inconsistent user configuration: mesh sizes, geometry, problem data.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested check needs an evaluator the caller did not supply.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Breakdown inside a numerical kernel (zero pivot).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sppde
