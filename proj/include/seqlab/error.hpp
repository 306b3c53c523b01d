#pragma once

#include <stdexcept>
#include <string>

namespace seqlab {

// Malformed text input (sequence files, descriptors, manifests).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside an operation's domain: length mismatches, zero
// probabilities, out-of-range block lengths.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A certified floor could not be decided within the coefficient budget.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command-line or descriptor parameters.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace seqlab
