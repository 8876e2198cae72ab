#pragma once

#include <stdexcept>
#include <string>

namespace stabsse {

/// Raised when a request exceeds what an implementation can handle
/// (dense oracles above their qubit bound, and similar).
class CapabilityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A Hamiltonian whose weights would not be non-negative.
class ModelError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Too few samples for the requested error analysis.
class EstimationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The truncated partition function became non-positive numerically.
class TruncationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace stabsse
