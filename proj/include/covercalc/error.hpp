#pragma once

#include <stdexcept>
#include <string>

namespace covercalc {

/// An argument lies outside the documented domain of an operation
/// (non-prime modulus, negative count, mismatched moduli, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data is internally inconsistent: a knot table entry that fails
/// validation, a Seifert matrix that is not one, a malformed document.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace covercalc
