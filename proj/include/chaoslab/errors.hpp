#pragma once

#include <stdexcept>
#include <string>

namespace chaoslab {

// Malformed arguments: empty cycles, bad encodings, out-of-range counts.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A state outside the phase space of the map it was handed to.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested sensitivity constant exceeds what the construction certifies.
class UnsupportedDelta : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A constructed certificate failed its own recomputation. Never expected.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chaoslab

namespace chaoslab {

// A file could not be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chaoslab
