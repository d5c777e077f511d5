#pragma once

#include <stdexcept>
#include <string>

namespace anirabi {

// Displacement-parameter equation has no sign change on [0, 1): the coupling
// regime exceeds what the single-displacement ansatz can absorb.
struct NoRootInUnitInterval : std::runtime_error {
  explicit NoRootInUnitInterval(const std::string& what) : std::runtime_error(what) {}
};

// Iterative eigensolver exceeded its sweep budget.  Carries the off-diagonal
// norm attained so the caller can judge how close it got.
struct NoConvergence : std::runtime_error {
  NoConvergence(const std::string& what, double offdiag) : std::runtime_error(what), offdiag_norm(offdiag) {}
  double offdiag_norm;
};

// Requested Fock cutoff loses more than the allowed norm when expanding a
// displaced state.
struct CutoffTooSmall : std::runtime_error {
  CutoffTooSmall(const std::string& what, double deficit) : std::runtime_error(what), norm_deficit(deficit) {}
  double norm_deficit;
};

// State vector handed to an expectation value is not unit-normalized.
struct UnnormalizedState : std::invalid_argument {
  explicit UnnormalizedState(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace anirabi
