#pragma once

#include <stdexcept>
#include <string>

namespace supercluster {

// Bad caller input: malformed arguments, size mismatches, out-of-range indices.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined operation, e.g. inverting zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration would exceed its configured cap. Never silently truncated.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proven identity failed on a concrete input. The message names the identity.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace supercluster
