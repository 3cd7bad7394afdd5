#pragma once

#include <stdexcept>
#include <string>

namespace tatehh {

// Error taxonomy shared by every module. The CLI maps these onto exit codes.

/// Mathematically undefined request (zero to a negative power, zero twist).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// API misuse: mismatched fields or algebras, degrees outside a window.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A theorem hypothesis does not hold (e.g. q is a root of unity).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured memory budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (scalars, spec files, tables).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tatehh
