#pragma once

#include <optional>

#include "anirabi/analytic.hpp"
#include "anirabi/model.hpp"

namespace anirabi {

struct ObservableSet {
  double mean_photons = 0.0;
  double sigma_z = 0.0;
  // Polariton number N = a+a + sigma_z/2 + 1/2; populated for the ground
  // level only (it is the U(1)-charge marker of the gprime = 0 limit).
  std::optional<double> polariton_mean;
  std::optional<double> polariton_var;
};

// Shift of the first transition E(1,-) - E(ground) relative to the exact
// Jaynes-Cummings value at the same (omega, Omega, g) — the counter-rotating
// (Bloch-Siegert-type) correction.  Exactly 0 when gprime = 0.
double bloch_siegert_shift(const ModelParams& p);

// Closed-form ground-level observables at displacement lam:
//   <a+a> = lam^2,  <sigma_z> = -e^{-2 lam^2},
//   <N>   = lam^2 - e^{-2 lam^2}/2 + 1/2,
//   var N = (3/2) lam^2 e^{-2 lam^2} + lam^2/2 - e^{-4 lam^2}/4 + 1/4.
ObservableSet ground_observables_for_lambda(double lam);

// Same, at the solved displacement of the model.
ObservableSet ground_observables(const ModelParams& p);

// Closed-form doublet-level observables (branch = doublet_minus/plus).
ObservableSet excited_observables(const ModelParams& p, int n, LevelKind branch);

// Numeric route: the same observables evaluated as diagonal-operator sums on
// a bare-basis expansion.  Exported alongside the closed forms so the two
// can always be compared.
ObservableSet observables_on_expansion(const WavefunctionExpansion& wf);

}  // namespace anirabi
