#pragma once

#include <iosfwd>
#include <string>

#include "anirabi/model.hpp"

namespace anirabi {

enum class GPrimeRule { ratio, fixed, independent };
enum class SweepMethod { analytic, numeric, both };

struct AxisSpec {
  double min = 0.0;
  double max = 0.5;
  int steps = 101;
};

struct SweepConfig {
  double omega = 1.0;
  double Omega = 0.3;
  AxisSpec g_axis{};
  GPrimeRule rule = GPrimeRule::ratio;
  double gprime_ratio = 2.0;   // rule == ratio: gprime = ratio * g
  double gprime_fixed = 0.0;   // rule == fixed: gprime constant
  AxisSpec gprime_axis{};      // rule == independent: second grid axis
  int n_levels = 7;
  int n_max = 120;
  SweepMethod method = SweepMethod::both;
};

const char* to_string(GPrimeRule rule);
const char* to_string(SweepMethod method);

// Throws std::invalid_argument on out-of-range values or a gprime rule the
// given operation does not accept.
void validate(const SweepConfig& cfg);

struct SweepStats {
  int points_total = 0;
  int points_failed = 0;  // grid points where the displacement equation had no root
};

// Each runner writes a CSV document: '#'-prefixed header block carrying the
// code version and every config value, a column-name row, then data rows with
// floats at 17 significant digits.  Output is byte-identical for identical
// configs.  Grid points whose displacement equation has no root keep their
// rows, with the analytic columns empty and the regime flag 0.

// Level-by-level energies, analytic vs full-Hamiltonian eigenvalues matched
// by parity label.  Requires rule ratio or fixed.
SweepStats run_spectrum_sweep(const SweepConfig& cfg, std::ostream& os);

// Doublet-1 displacement over an independent (g, gprime) grid: lambda1,
// equation residual, in_regime = lambda1 <= 0.5.
SweepStats run_lambda_surface(const SweepConfig& cfg, std::ostream& os);

// |Bloch-Siegert-type shift| over an independent (g, gprime) grid, analytic
// and oracle routes; in_regime = lambda1 <= 0.6.
SweepStats run_bloch_siegert_surface(const SweepConfig& cfg, std::ostream& os);

// Ground-level observables, closed-form and oracle-ground-state routes.
SweepStats run_observables(const SweepConfig& cfg, std::ostream& os);

// Single-point side-by-side comparison: levels by label plus ground
// observables and the transition shift in the header block.
SweepStats run_compare(const ModelParams& p, int n_levels, int n_max, std::ostream& os);

}  // namespace anirabi
