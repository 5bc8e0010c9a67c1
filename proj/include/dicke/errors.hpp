#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

/// Bad argument to a public operation (out of range, inconsistent sizes).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two objects that must live on the same sector (or have the same size) do not.
class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The all-up state lies outside the sector because there are fewer photons than spins.
class FullChargeUnreachable : public std::domain_error {
 public:
  FullChargeUnreachable() : std::domain_error("full charge unreachable") {}
};

/// Tridiagonal QL iteration exceeded its per-eigenvalue sweep budget.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fidelity series contains no local maximum above one half.
class NoFlipFound : public std::runtime_error {
 public:
  NoFlipFound() : std::runtime_error("no flip found") {}
};

/// Fock-space truncation in the brute-force simulator lost population.
class TruncationLeakage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dicke
