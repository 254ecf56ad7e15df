#pragma once

#include <stdexcept>
#include <string>

namespace fracfem {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Two operands that must live on the same mesh (or have matching sizes) do not.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity failed a self-check (eigen residual, orthonormality, SPD test).
class NumericalInvariantError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace fracfem
