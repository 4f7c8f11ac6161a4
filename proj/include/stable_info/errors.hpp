#pragma once

#include <stdexcept>
#include <string>

namespace stable_info {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Grid or run configuration that cannot deliver the requested accuracy.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical procedure failed to converge or produced an invalid value.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested evaluation route does not apply to this input.
class MethodError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stable_info
