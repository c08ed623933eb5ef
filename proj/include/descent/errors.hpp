#pragma once

#include <stdexcept>
#include <string>

namespace descent {

// Mathematically invalid input: inverting zero, a zero cocycle value,
// inverting a map that is not birational.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller mixed incompatible objects: different backends, conductors or sizes.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Valid input outside what the implementation handles.
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace descent
