#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Argument outside the mathematical domain of an operation (u outside (0,1],
/// negative integrand where nonnegativity is required, empty sequence, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A checked precondition of a transform or solver does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Structurally invalid input: malformed JSON, unsorted lists, mass sums, overlaps.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hardy
